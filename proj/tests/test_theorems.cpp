#include "walkdom/theorems.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "walkdom/canonical.hpp"
#include "walkdom/graph6.hpp"

using namespace walkdom;

TEST_CASE("registry holds the eight characterizations") {
  const auto& specs = registry();
  REQUIRE(specs.size() == 8);
  CHECK(to_string(registry_entry("T6").forbidden) == "hole,D,X5,F");
  CHECK(to_string(registry_entry("T7").forbidden) == "hole");
  CHECK(registry_entry("T3").class_pairs.size() == 3);
  CHECK(to_string(registry_entry("T1").class_pairs[0]) == "IP/m3");
  CHECK(to_string(registry_entry("T4").forbidden) == "P4,A,co-gemK2,C5,co-X58,X96,F3");
  CHECK_THROWS_AS(registry_entry("T9"), Error);
}

TEST_CASE("corpus counts match the published connected-graph sequence") {
  std::vector<std::size_t> cumulative = {1, 2, 4, 10, 31, 143};
  for (int n = 1; n <= 6; ++n) CHECK(generate_corpus(n).size() == cumulative[n - 1]);
  CHECK_THROWS_AS(generate_corpus(9), Error);
  CHECK_THROWS_AS(generate_corpus(0), Error);
}

TEST_CASE("generator reaches its supported bound of eight vertices") {
  auto corpus = generate_corpus(8);
  std::size_t exactly_8 = 0;
  for (const Graph& g : corpus)
    if (g.vertex_count() == 8) ++exactly_8;
  CHECK(exactly_8 == 11117);
}

TEST_CASE("corpus graphs are connected, canonical, deduplicated and ordered") {
  auto corpus = generate_corpus(6);
  std::set<std::string> seen;
  std::string prev;
  for (const Graph& g : corpus) {
    CHECK(g.connected());
    std::string canon = canonical_form(g);
    CHECK(canon == encode_graph6(g));  // stored in canonical labeling
    CHECK(seen.insert(canon).second);
  }
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    int a = corpus[i - 1].vertex_count(), b = corpus[i].vertex_count();
    CHECK(a <= b);
    if (a == b) CHECK(encode_graph6(corpus[i - 1]) < encode_graph6(corpus[i]));
  }
}

TEST_CASE("generator agrees with edge-subset brute force up to n=5") {
  for (int n = 4; n <= 5; ++n) {
    auto brute = oracle::connected_graphs_bruteforce(n);
    auto corpus = generate_corpus(n);
    std::size_t exactly_n = 0;
    for (const Graph& g : corpus)
      if (g.vertex_count() == n) ++exactly_n;
    CHECK(exactly_n == brute.size());
  }
}

TEST_CASE("a tiny corpus verifies vacuously") {
  std::vector<Graph> p3{Graph::from_edge_list(3, {{0, 1}, {1, 2}})};
  Report r = verify_theorem(registry_entry("T7"), p3);
  CHECK(r.graphs_checked == 1);
  CHECK(r.disagreements.empty());
}

TEST_CASE("all eight theorems verify cleanly on the n<=5 corpus") {
  auto corpus = generate_corpus(5);
  for (const Report& r : verify_registry(corpus, 1)) {
    CHECK(r.graphs_checked == 31);
    CHECK(r.disagreements.empty());
  }
}

TEST_CASE("T3 on the n<=6 corpus: 143 graphs, zero disagreements") {
  Report r = verify_theorem(registry_entry("T3"), generate_corpus(6));
  CHECK(r.graphs_checked == 143);
  CHECK(r.disagreements.empty());
}

TEST_CASE("verification output is independent of the job count") {
  auto corpus = generate_corpus(5);
  Report serial = verify_theorem(registry_entry("T5"), corpus, 1);
  Report parallel = verify_theorem(registry_entry("T5"), corpus, 4);
  CHECK(serial.disagreements.size() == parallel.disagreements.size());
  CHECK(report_table({serial}) == report_table({parallel}));
}

TEST_CASE("disconnected corpus graphs are rejected") {
  std::vector<Graph> bad{Graph::from_edge_list(3, {{0, 1}})};
  CHECK_THROWS_AS(verify_theorem(registry_entry("T7"), bad), Error);
}

TEST_CASE("report table format") {
  Report r = verify_theorem(registry_entry("T7"), generate_corpus(4));
  CHECK(report_table({r}) == "T7: 10 graphs, 0 disagreements\n");
}

TEST_CASE("seven-vertex obstruction for m3/IP beyond the registered list") {
  // free of hole, D, Antenna and X5, yet the m3-path x1,x5,x6,x2 leaves x0
  // of the induced path x1,x3,x0,x4,x2 undominated; cross-checked by the
  // sequence-level oracle
  Graph g = decode_graph6("FEhXw");
  CHECK(is_free(g, registry_entry("T5").forbidden).free);
  ClassPair pair = parse_class_pair("m3/IP");
  Verdict v = is_member(g, pair);
  REQUIRE_FALSE(v.member);
  CHECK(certificate_replays(g, pair, *v.certificate));
  CHECK_FALSE(oracle::member_by_sequences(g, pair));
  // minimal: every proper induced subgraph is a member
  for (VertexSet keep = 1; keep < g.all_vertices(); ++keep) {
    auto [sub, _] = g.induced_subgraph(keep);
    CHECK(is_member_componentwise(sub, pair));
  }
}

TEST_CASE("m3/SP membership is not closed under induced subgraphs") {
  // the host contains X5 but shortens its endpoint distance, so the
  // embedded refutation does not lift
  Graph host = decode_graph6("FQqzw");
  auto emb = contains_induced(host, catalog_entry("X5").graph);
  REQUIRE(emb.has_value());
  ClassPair pair = parse_class_pair("m3/SP");
  CHECK(is_member(host, pair).member);
  CHECK(oracle::member_by_sequences(host, pair));
  CHECK_FALSE(is_member(catalog_entry("X5").graph, pair).member);
  CHECK(host.distance((*emb)[0], (*emb)[3]) <
        catalog_entry("X5").graph.distance(0, 3));
}

TEST_CASE("walk class inclusions hold on the named graphs") {
  CHECK(check_walk_class_inclusions(decode_graph6("Dhc")).empty());
  CHECK(check_walk_class_inclusions(catalog_entry("house").graph).empty());
  CHECK(check_walk_class_inclusions(Graph::from_edge_list(2, {{0, 1}})).empty());  // vacuous
  for (const Graph& g : generate_corpus(4)) CHECK(check_walk_class_inclusions(g).empty());
}
