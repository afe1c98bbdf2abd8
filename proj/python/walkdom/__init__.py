"""Walk domination graph classes: membership with certificates,
forbidden-subgraph cross-validation, and minimal-obstruction mining."""

from ._core import (
    Graph,
    WalkClass,
    WalkdomError,
    catalog,
    contains_induced,
    dominates,
    enumerate_internal_sets,
    enumerate_sequences,
    generate_corpus,
    has_hole,
    is_free,
    is_isomorphic,
    is_member,
    minimal_non_members,
    parse_walk_class,
    realize,
    registry,
    satisfies_class,
    verify_theorem,
)

__all__ = [
    "Graph",
    "WalkClass",
    "WalkdomError",
    "catalog",
    "contains_induced",
    "dominates",
    "enumerate_internal_sets",
    "enumerate_sequences",
    "generate_corpus",
    "has_hole",
    "is_free",
    "is_isomorphic",
    "is_member",
    "minimal_non_members",
    "parse_walk_class",
    "realize",
    "registry",
    "satisfies_class",
    "verify_theorem",
]

__version__ = "0.1.0"
