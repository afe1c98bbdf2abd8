#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"
#include "walkdom/json_io.hpp"
#include "walkdom/miner.hpp"
#include "walkdom/theorems.hpp"

namespace walkdom {

namespace {

Graph load_graph(const std::string& graph6, const std::string& edges_path) {
  if (!graph6.empty() && !edges_path.empty())
    raise(Errc::ParseError, "give either --graph6 or --edges, not both");
  if (!graph6.empty()) return decode_graph6(graph6);
  if (!edges_path.empty()) {
    std::ifstream in(edges_path);
    if (!in) raise(Errc::ParseError, "cannot open " + edges_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list_text(buf.str());
  }
  raise(Errc::ParseError, "a graph is required (--graph6 or --edges)");
}

int parse_vertex(const Graph& g, const std::string& token) {
  int by_label = g.vertex_by_label(token);
  if (by_label >= 0) return by_label;
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < g.vertex_count()) return v;
  } catch (...) {
  }
  raise(Errc::ParseError, "unknown vertex \"" + token + "\"");
}

std::vector<int> parse_vertex_list(const Graph& g, const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_vertex(g, token));
  return out;
}

std::pair<int, int> parse_pair(const Graph& g, const std::string& text) {
  auto vs = parse_vertex_list(g, text);
  if (vs.size() != 2) raise(Errc::ParseError, "--pair wants exactly two vertices, e.g. x0,x2");
  return {vs[0], vs[1]};
}

std::vector<Graph> load_corpus(int max_n, const std::string& corpus_path) {
  if (max_n > 0 && !corpus_path.empty())
    raise(Errc::ParseError, "give either --max-n or --corpus, not both");
  if (!corpus_path.empty()) {
    auto graphs = read_graph6_file(corpus_path);
    for (const auto& g : graphs)
      if (!g.connected()) raise(Errc::DisconnectedGraph, "corpus graphs must be connected");
    return graphs;
  }
  if (max_n <= 0) raise(Errc::ParseError, "a corpus is required (--max-n or --corpus)");
  return generate_corpus(max_n);
}

int cmd_check(const Graph& g, const std::string& class_pair, bool json, std::ostream& out) {
  ClassPair pair = parse_class_pair(class_pair);
  Verdict verdict = is_member(g, pair);
  if (json) {
    nlohmann::json doc{{"class_pair", to_string(pair)},
                       {"graph6", encode_graph6(g)},
                       {"member", verdict.member}};
    doc["certificate"] =
        verdict.certificate ? certificate_json(g, pair, *verdict.certificate, encode_graph6(g))
                            : nlohmann::json();
    out << doc.dump(2) << '\n';
  } else if (verdict.member) {
    out << "member: " << to_string(pair) << '\n';
  } else {
    const Certificate& c = *verdict.certificate;
    out << "non-member: " << to_string(pair) << " (pair " << g.label(c.u) << "," << g.label(c.v)
        << "; dominator " << format_vertices(g, c.dominator.seq) << " misses "
        << format_vertices(g, c.dominatee.seq) << " at " << g.label(c.undominated) << ")\n";
  }
  return verdict.member ? 0 : 1;
}

int cmd_enumerate(const Graph& g, const std::string& pair_text, const std::string& cls_text,
                  bool sets, int bound, bool json, std::ostream& out) {
  auto [u, v] = parse_pair(g, pair_text);
  WalkClass cls = parse_walk_class(cls_text);
  if (json) {
    nlohmann::json doc{{"graph6", encode_graph6(g)},
                       {"u", g.label(u)},
                       {"v", g.label(v)},
                       {"walk_class", to_string(cls)}};
    if (sets) {
      nlohmann::json arr = nlohmann::json::array();
      for (VertexSet s : enumerate_internal_sets(g, u, v, cls).sets)
        arr.push_back(set_to_vertices(s));
      doc["internal_sets"] = std::move(arr);
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const Walk& w : enumerate_sequences(g, u, v, cls, bound)) arr.push_back(w.seq);
      doc["walks"] = std::move(arr);
    }
    out << doc.dump(2) << '\n';
  } else if (sets) {
    for (VertexSet s : enumerate_internal_sets(g, u, v, cls).sets)
      out << format_vertices(g, set_to_vertices(s)) << '\n';
  } else {
    for (const Walk& w : enumerate_sequences(g, u, v, cls, bound))
      out << format_vertices(g, w.seq) << '\n';
  }
  return 0;
}

int cmd_dominates(const Graph& g, const std::string& pair_text, const std::string& walk_text,
                  const std::string& walk2_text, bool json, std::ostream& out) {
  auto [u, v] = parse_pair(g, pair_text);
  Walk w{parse_vertex_list(g, walk_text)};
  Walk w2{parse_vertex_list(g, walk2_text)};
  if (w.seq.size() < 2 || w.u() != u || w.v() != v || w2.u() != u || w2.v() != v)
    raise(Errc::EndpointMismatch, "both walks must run from the pair's first vertex to its second");
  DominationResult r = dominates(g, w, w2);
  if (json) {
    nlohmann::json doc{{"dominates", r.dominates}};
    doc["undominated"] = r.dominates ? nlohmann::json() : nlohmann::json(g.label(r.undominated));
    out << doc.dump(2) << '\n';
  } else if (r.dominates) {
    out << "true\n";
  } else {
    out << "false (undominated: " << g.label(r.undominated) << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& theorem, int max_n, const std::string& corpus_path, int jobs,
               bool json, std::ostream& out, std::ostream& err) {
  auto corpus = load_corpus(max_n, corpus_path);
  std::vector<Report> reports;
  if (theorem == "all") {
    reports = verify_registry(corpus, jobs);
  } else {
    reports.push_back(verify_theorem(registry_entry(theorem), corpus, jobs));
  }
  std::size_t total = 0;
  for (const auto& r : reports) {
    total += r.disagreements.size();
    err << r.theorem_id << " took " << r.seconds << "s\n";
  }
  if (json)
    out << reports_to_json(reports) << '\n';
  else
    out << report_table(reports);
  return total == 0 ? 0 : 1;
}

int cmd_mine(const std::string& class_pair, int max_n, const std::string& corpus_path, int jobs,
             bool json, std::ostream& out) {
  ClassPair pair = parse_class_pair(class_pair);
  auto corpus = load_corpus(max_n, corpus_path);
  MinerResult result = minimal_non_members(pair, corpus, jobs);
  // classify against everything the tool knows by name; specific names
  // before the generic hole family
  ForbiddenSet known = parse_forbidden("P4,co-gemK2,C5,D,F3,A,X96,house,X5,co-X58,Antenna,F,hole");
  result = classify_candidates(std::move(result), {known});
  out << (json ? miner_result_json(result) + "\n" : miner_result_text(result));
  return 0;
}

int cmd_catalog(const std::string& name, const std::string& emit, std::ostream& out) {
  std::vector<const PatternEntry*> entries;
  if (name.empty())
    for (const auto& e : catalog()) entries.push_back(&e);
  else
    entries.push_back(&catalog_entry(name));
  for (const auto* e : entries) {
    if (emit == "graph6") {
      out << encode_graph6(e->graph) << '\n';
    } else if (emit == "dot") {
      std::string ident = e->name;
      std::replace(ident.begin(), ident.end(), '-', '_');
      out << e->graph.to_dot(ident);
    } else
      out << e->name << ": " << e->graph.vertex_count() << " vertices, " << e->graph.edge_count()
          << " edges, " << encode_graph6(e->graph) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"walk domination graph classes: membership, certificates, verification, mining"};
  app.require_subcommand(1);

  std::string graph6_text, edges_path, class_pair, pair_text, walk_class_text;
  std::string walk_text, walk2_text, theorem = "all", corpus_path, name, emit;
  int bound = -1, max_n = 0, jobs = 1;
  bool sets = false, json = false;

  auto* check = app.add_subcommand("check", "decide membership of a graph in a class A/B");
  check->add_option("--class", class_pair, "class pair, e.g. l2/m3")->required();
  check->add_option("--graph6", graph6_text, "graph as a graph6 line");
  check->add_option("--edges", edges_path, "graph as an edge-list file (\"n m\" header)");
  check->add_flag("--json", json, "machine-readable output");

  auto* enumerate = app.add_subcommand("enumerate", "list walks or internal sets for a pair");
  enumerate->add_option("--graph6", graph6_text);
  enumerate->add_option("--edges", edges_path);
  enumerate->add_option("--pair", pair_text, "endpoints, e.g. x0,x2")->required();
  enumerate->add_option("--walk-class", walk_class_text, "SP IP P m3 l2 l3 TW WTW W")->required();
  enumerate->add_flag("--sets", sets, "emit realizable internal-vertex sets instead of walks");
  enumerate->add_option("--bound", bound, "walk length bound (default 2n)");
  enumerate->add_flag("--json", json);

  auto* dom = app.add_subcommand("dominates", "test whether one walk dominates another");
  dom->add_option("--graph6", graph6_text);
  dom->add_option("--edges", edges_path);
  dom->add_option("--pair", pair_text)->required();
  dom->add_option("--walk", walk_text, "dominator walk, e.g. x0,x1,x2")->required();
  dom->add_option("--walk2", walk2_text, "dominatee walk")->required();
  dom->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "cross-validate registry characterizations");
  verify->add_option("--theorem", theorem, "T1..T8 or all (default all)");
  verify->add_option("--max-n", max_n, "built-in corpus bound (<= 8)");
  verify->add_option("--corpus", corpus_path, "graph6 file corpus");
  verify->add_option("--jobs", jobs, "worker threads (output independent of N)");
  verify->add_flag("--json", json);

  auto* mine = app.add_subcommand("mine", "search a corpus for minimal non-members");
  mine->add_option("--class", class_pair)->required();
  mine->add_option("--max-n", max_n);
  mine->add_option("--corpus", corpus_path);
  mine->add_option("--jobs", jobs);
  mine->add_flag("--json", json);

  auto* cat = app.add_subcommand("catalog", "dump the named-graph catalog");
  cat->add_option("--name", name, "single entry");
  cat->add_option("--emit", emit, "dot or graph6")
      ->check(CLI::IsMember({"dot", "graph6"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(load_graph(graph6_text, edges_path), class_pair, json, out);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(load_graph(graph6_text, edges_path), pair_text, walk_class_text, sets,
                           bound, json, out);
    if (app.got_subcommand(dom))
      return cmd_dominates(load_graph(graph6_text, edges_path), pair_text, walk_text, walk2_text,
                           json, out);
    if (app.got_subcommand(verify)) return cmd_verify(theorem, max_n, corpus_path, jobs, json, out, err);
    if (app.got_subcommand(mine)) return cmd_mine(class_pair, max_n, corpus_path, jobs, json, out);
    if (app.got_subcommand(cat)) return cmd_catalog(name, emit, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace walkdom
