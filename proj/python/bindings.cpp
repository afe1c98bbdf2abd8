#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"
#include "walkdom/json_io.hpp"
#include "walkdom/miner.hpp"
#include "walkdom/theorems.hpp"

namespace py = pybind11;
using namespace walkdom;

namespace {

py::object certificate_dict(const Graph& g, ClassPair pair, const Certificate& cert) {
  auto labels = [&](const Walk& w) {
    py::list out;
    for (int x : w.seq) out.append(g.label(x));
    return out;
  };
  py::dict d;
  d["class_pair"] = to_string(pair);
  d["u"] = g.label(cert.u);
  d["v"] = g.label(cert.v);
  d["dominator"] = cert.dominator.seq;
  d["dominatee"] = cert.dominatee.seq;
  d["dominator_labels"] = labels(cert.dominator);
  d["dominatee_labels"] = labels(cert.dominatee);
  d["undominated"] = cert.undominated;
  d["undominated_label"] = g.label(cert.undominated);
  return d;
}

std::vector<int> set_arg(const py::iterable& it) {
  std::vector<int> out;
  for (py::handle h : it) out.push_back(py::cast<int>(h));
  return out;
}

VertexSet to_mask(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "walk domination graph classes";

  py::register_exception<Error>(m, "WalkdomError");

  py::enum_<WalkClass>(m, "WalkClass")
      .value("SP", WalkClass::SP)
      .value("IP", WalkClass::IP)
      .value("P", WalkClass::P)
      .value("m3", WalkClass::M3)
      .value("l2", WalkClass::L2)
      .value("l3", WalkClass::L3)
      .value("TW", WalkClass::TW)
      .value("WTW", WalkClass::WTW)
      .value("W", WalkClass::W);
  m.def("parse_walk_class", &parse_walk_class);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edge_list(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
      .def("degree", &Graph::degree)
      .def("distance", &Graph::distance)
      .def("connected", &Graph::connected)
      .def("label", &Graph::label)
      .def("complement", &Graph::complement)
      .def("induced_subgraph",
           [](const Graph& g, const py::iterable& keep) {
             return g.induced_subgraph(to_mask(set_arg(keep)));
           })
      .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("to_dot", &Graph::to_dot, py::arg("name") = "G")
      .def("canonical_form", [](const Graph& g) { return canonical_form(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " " + encode_graph6(g) + ">";
      });

  m.def("is_isomorphic", &is_isomorphic);

  m.def("satisfies_class",
        [](const Graph& g, const std::vector<int>& seq, const std::string& cls) {
          return satisfies_class(g, seq, parse_walk_class(cls));
        });
  m.def("enumerate_sequences",
        [](const Graph& g, int u, int v, const std::string& cls, int bound) {
          std::vector<std::vector<int>> out;
          for (const Walk& w : enumerate_sequences(g, u, v, parse_walk_class(cls), bound))
            out.push_back(w.seq);
          return out;
        },
        py::arg("g"), py::arg("u"), py::arg("v"), py::arg("walk_class"), py::arg("bound") = -1);
  m.def("enumerate_internal_sets",
        [](const Graph& g, int u, int v, const std::string& cls) {
          std::vector<std::vector<int>> out;
          for (VertexSet s : enumerate_internal_sets(g, u, v, parse_walk_class(cls)).sets)
            out.push_back(set_to_vertices(s));
          return out;
        });
  m.def("realize", [](const Graph& g, int u, int v, const std::string& cls,
                      const py::iterable& internal) {
    return realize(g, u, v, parse_walk_class(cls), to_mask(set_arg(internal))).seq;
  });

  m.def("dominates",
        [](const Graph& g, const std::vector<int>& w, const std::vector<int>& w2) {
          DominationResult r = dominates(g, Walk{w}, Walk{w2});
          return py::make_tuple(r.dominates, r.dominates ? py::object(py::none())
                                                         : py::object(py::int_(r.undominated)));
        });
  m.def("is_member", [](const Graph& g, const std::string& pair_text) {
    ClassPair pair = parse_class_pair(pair_text);
    Verdict v = is_member(g, pair);
    py::dict d;
    d["member"] = v.member;
    d["certificate"] = v.certificate ? certificate_dict(g, pair, *v.certificate) : py::object(py::none());
    return d;
  });

  m.def("catalog", [] {
    py::dict d;
    for (const auto& e : catalog()) d[e.name.c_str()] = e.graph;
    return d;
  });
  m.def("contains_induced", [](const Graph& host, const Graph& pattern) {
    auto r = contains_induced(host, pattern);
    return r ? py::object(py::cast(*r)) : py::object(py::none());
  });
  m.def("has_hole", [](const Graph& g) {
    auto r = has_hole(g);
    return r ? py::object(py::cast(*r)) : py::object(py::none());
  });
  m.def("is_free", [](const Graph& g, const std::string& spec) {
    FreeResult r = is_free(g, parse_forbidden(spec));
    py::dict d;
    d["free"] = r.free;
    d["offender"] = r.offender;
    d["embedding"] = r.embedding;
    return d;
  });

  m.def("generate_corpus", &generate_corpus);
  m.def("registry", [] {
    py::list out;
    for (const auto& spec : registry()) {
      py::dict d;
      d["id"] = spec.id;
      d["statement"] = spec.statement;
      py::list pairs;
      for (ClassPair p : spec.class_pairs) pairs.append(to_string(p));
      d["class_pairs"] = pairs;
      d["forbidden"] = to_string(spec.forbidden);
      out.append(d);
    }
    return out;
  });
  m.def("verify_theorem",
        [](const std::string& id, int max_n, int jobs) {
          Report r = verify_theorem(registry_entry(id), generate_corpus(max_n), jobs);
          py::dict d;
          d["theorem"] = r.theorem_id;
          d["graphs"] = r.graphs_checked;
          py::list dis;
          for (const auto& x : r.disagreements) {
            py::dict e;
            e["graph6"] = x.graph6;
            e["class_pair"] = to_string(x.pair);
            e["definition_member"] = x.definition_member;
            e["forbidden_free"] = x.forbidden_free;
            dis.append(e);
          }
          d["disagreements"] = dis;
          return d;
        },
        py::arg("theorem"), py::arg("max_n"), py::arg("jobs") = 1);

  m.def("minimal_non_members",
        [](const std::string& pair_text, int max_n) {
          MinerResult r = minimal_non_members(parse_class_pair(pair_text), generate_corpus(max_n));
          ForbiddenSet known =
              parse_forbidden("P4,co-gemK2,C5,D,F3,A,X96,house,X5,co-X58,Antenna,F,hole");
          r = classify_candidates(std::move(r), {known});
          py::list out;
          for (const auto& c : r.candidates) {
            py::dict d;
            d["graph6"] = c.graph6;
            d["classification"] =
                c.tag == CandidateTag::ContainsKnown ? "CONTAINS_KNOWN" : "NEW";
            d["known_name"] = c.known_name;
            d["certificate"] = certificate_dict(c.graph, r.pair, c.certificate);
            out.append(d);
          }
          py::dict res;
          res["class_pair"] = to_string(r.pair);
          res["caveat"] = r.caveat;
          res["candidates"] = out;
          return res;
        },
        py::arg("class_pair"), py::arg("max_n"));
}
