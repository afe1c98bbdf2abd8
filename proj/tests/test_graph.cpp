#include "walkdom/graph.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "walkdom/canonical.hpp"
#include "walkdom/patterns.hpp"
#include "walkdom/theorems.hpp"

using namespace walkdom;

namespace {
Graph c5() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
}  // namespace

TEST_CASE("from_edge_list builds the hole with default labels") {
  Graph g = c5();
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(0, 4));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.label(0) == "x0");
  CHECK(g.label(4) == "x4");
  CHECK(g.vertex_by_label("x3") == 3);
}

TEST_CASE("single vertex and duplicate edge collapse") {
  Graph one = Graph::from_edge_list(1, {});
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.adjacent(1, 0));
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(63, {}), Error);
}

TEST_CASE("adjacency stays symmetric and irreflexive through constructors") {
  for (const Graph& g : generate_corpus(5)) {
    std::vector<Graph> derived{g, g.complement()};
    if (g.vertex_count() > 1)
      derived.push_back(g.induced_subgraph(g.all_vertices() >> 1).first);
    for (const Graph& h : derived) {
      for (int i = 0; i < h.vertex_count(); ++i) {
        CHECK_FALSE(h.adjacent(i, i));
        for (int j = 0; j < h.vertex_count(); ++j) CHECK(h.adjacent(i, j) == h.adjacent(j, i));
      }
    }
  }
}

TEST_CASE("distance examples") {
  CHECK(c5().distance(0, 2) == 2);
  CHECK(c5().distance(1, 1) == 0);
  Graph domino = catalog_entry("D").graph;
  CHECK(domino.distance(0, 3) == 3);
  Graph split = Graph::from_edge_list(3, {{0, 1}});
  CHECK(split.distance(0, 2) == Graph::kUnreachable);
  CHECK_FALSE(split.connected());
  CHECK(split.components().size() == 2);
}

TEST_CASE("distance satisfies the triangle inequality and matches adjacency") {
  for (const Graph& g : generate_corpus(5)) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a != b) CHECK((g.distance(a, b) == 1) == g.adjacent(a, b));
        for (int c = 0; c < n; ++c)
          CHECK(g.distance(a, c) <= g.distance(a, b) + g.distance(b, c));
      }
  }
}

TEST_CASE("complement is an involution and flips K2") {
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.complement().edge_count() == 0);
  for (const Graph& g : generate_corpus(5)) CHECK(g.complement().complement() == g);
}

TEST_CASE("complement of the five-vertex path is the house") {
  Graph p5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(is_isomorphic(p5.complement(), catalog_entry("house").graph));
}

TEST_CASE("induced subgraph of the domino") {
  Graph domino = catalog_entry("D").graph;
  auto [sub, map] = domino.induced_subgraph(vbit(0) | vbit(1) | vbit(4) | vbit(5));
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 4);  // the chordless square x0,x1,x4,x5
  for (int v = 0; v < 4; ++v) CHECK(sub.degree(v) == 2);
  CHECK(map[0] == 0);
  CHECK(map[2] == -1);
  CHECK(sub.label(2) == "x4");  // labels survive
}

TEST_CASE("dropping x0 from X5 leaves a house") {
  Graph x5 = catalog_entry("X5").graph;
  auto [sub, _] = x5.induced_subgraph(x5.all_vertices() & ~vbit(0));
  CHECK(is_isomorphic(sub, catalog_entry("house").graph));
}

TEST_CASE("induced subgraph on all vertices is the identity") {
  Graph g = catalog_entry("F").graph;
  auto [sub, _] = g.induced_subgraph(g.all_vertices());
  CHECK(sub == g);
  CHECK_THROWS_AS(g.induced_subgraph(0), Error);
}

TEST_CASE("set_less is sorted-list lexicographic order") {
  auto expect_less = [](std::vector<int> a, std::vector<int> b) {
    VertexSet sa = 0, sb = 0;
    for (int x : a) sa |= vbit(x);
    for (int x : b) sb |= vbit(x);
    CHECK(set_less(sa, sb));
    CHECK_FALSE(set_less(sb, sa));
    CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
  };
  expect_less({0, 5}, {1, 2});
  expect_less({1, 2}, {1, 2, 4});
  expect_less({1, 2, 4}, {1, 4});
  expect_less({0, 1, 2, 3}, {0, 1, 2, 3, 4});
  expect_less({1, 2}, {2});
}

TEST_CASE("dot output carries labels and edges") {
  std::string dot = c5().to_dot("hole");
  CHECK(dot.find("graph hole {") != std::string::npos);
  CHECK(dot.find("\"x0\" -- \"x1\";") != std::string::npos);
}

TEST_CASE("edge list text round trip") {
  Graph g = catalog_entry("Antenna").graph;
  Graph back = parse_edge_list_text(to_edge_list_text(g));
  CHECK(back == g);
  CHECK_THROWS_AS(parse_edge_list_text("3"), Error);
  CHECK_THROWS_AS(parse_edge_list_text("2 1\n0"), Error);
}
