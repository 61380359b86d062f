#include <numeric>

#include "doctest.h"
#include "legnet/error.hpp"
#include "legnet/graph.hpp"
#include "oracles.hpp"

using namespace legnet;

namespace {

LegalDocument doc(const char* id, int sector = 3, Date effect = Date(1970, 3, 20), Date expiry = Date::sentinel()) {
  return {DocId(id), static_cast<Sector>(sector), effect, expiry, false};
}

}  // namespace

TEST_CASE("add_document") {
  LegislationGraph g;
  g.add_document(doc("370L0220"));
  CHECK(g.node_count() == 1);
  CHECK(g.find("370L0220").has_value());
  CHECK_THROWS_AS(g.add_document(doc("370L0220")), DuplicateIdError);
  CHECK_THROWS_AS(g.add_document(doc("390L0001", 3, Date(1990, 1, 1), Date(1980, 1, 1))), ValidationError);
  CHECK(g.node_count() == 1);
}

TEST_CASE("add_reference dedupes, rejects self loops and unknown ids") {
  LegislationGraph g;
  g.add_document(doc("370L0220"));
  g.add_document(doc("383L0351", 3, Date(1983, 6, 16)));
  CHECK(g.add_reference({DocId("383L0351"), DocId("370L0220"), RefType::amendment_to}));
  CHECK(g.add_reference({DocId("370L0220"), DocId("383L0351"), RefType::amended_by}));
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.add_reference({DocId("383L0351"), DocId("370L0220"), RefType::amendment_to}));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_reference({DocId("370L0220"), DocId("370L0220"), RefType::instruments_cited}),
                  ValidationError);
  try {
    g.add_reference({DocId("370L0220"), DocId("999X9999"), RefType::other});
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    CHECK(std::string(e.what()).find("999X9999") != std::string::npos);
  }
}

TEST_CASE("sealed graphs reject mutation and unsealed graphs reject analysis") {
  LegislationGraph g;
  g.add_document(doc("A"));
  CHECK_THROWS_AS(g.projection(), PhaseError);
  g.seal();
  CHECK_THROWS_AS(g.add_document(doc("B")), PhaseError);
  CHECK_THROWS_AS(g.add_edge(0, 0, RefType::other), PhaseError);
}

TEST_CASE("degree by direction and scope") {
  SUBCASE("star centre with five typed in-edges") {
    const auto g = oracle::make_graph(6, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    CHECK(degree(g, "n00000", Direction::in, DegreeScope::typed) == 5);
    CHECK(degree(g, "n00000", Direction::out, DegreeScope::typed) == 0);
    CHECK(degree(g, "n00000", Direction::total, DegreeScope::projection) == 5);
  }
  SUBCASE("one neighbour through three edge types") {
    const auto g = oracle::make_graph(
        2, {{0, 1, RefType::legal_basis}, {0, 1, RefType::instruments_cited}, {1, 0, RefType::other}});
    CHECK(degree(g, "n00000", Direction::total, DegreeScope::typed) == 3);
    CHECK(degree(g, "n00000", Direction::total, DegreeScope::projection) == 1);
  }
  SUBCASE("isolated node and unknown id") {
    const auto g = oracle::make_graph(3, {{0, 1}});
    CHECK(degree(g, "n00002", Direction::total, DegreeScope::typed) == 0);
    CHECK_THROWS_AS(degree(g, "zzz", Direction::in, DegreeScope::typed), LookupError);
  }
}

TEST_CASE("simple projection collapses directions and types") {
  CHECK(oracle::make_graph(0, std::vector<std::pair<int, int>>{}).projection().edge_count() == 0);
  const auto two = oracle::make_graph(2, {{0, 1, RefType::legal_basis}, {1, 0, RefType::instruments_cited}});
  CHECK(two.projection().edge_count() == 1);
  // Three layers: treaty 0, agreement 1, legislation 2..4.
  const auto layered = oracle::make_graph(5, {{2, 0, RefType::legal_basis},
                                              {3, 0, RefType::legal_basis},
                                              {2, 1, RefType::legal_basis},
                                              {3, 2, RefType::instruments_cited},
                                              {4, 3, RefType::instruments_cited},
                                              {4, 3, RefType::legal_basis}});
  CHECK(layered.edge_count() == 6);
  CHECK(layered.projection().edge_count() == 5);
  const auto nb = layered.projection().neighbors(3);
  CHECK(std::vector<NodeIndex>(nb.begin(), nb.end()) == std::vector<NodeIndex>{0, 2, 4});
}

TEST_CASE("degree sums and projection invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_digraph(40 + seed, 2.5, seed);
    std::size_t in = 0, out = 0;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      in += g.degree(v, Direction::in);
      out += g.degree(v, Direction::out);
      CHECK(g.degree(v, Direction::total) == g.degree(v, Direction::in) + g.degree(v, Direction::out));
    }
    CHECK(in == g.edge_count());
    CHECK(out == g.edge_count());
    const auto& p = g.projection();
    CHECK(p.edge_count() <= g.edge_count());
    const auto adj = oracle::undirected_adjacency(g);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      CHECK(adj[i][i] == 0);
      for (std::size_t j = i + 1; j < adj.size(); ++j) pairs += adj[i][j];
      CHECK(p.degree(static_cast<NodeIndex>(i)) ==
            static_cast<std::size_t>(std::accumulate(adj[i].begin(), adj[i].end(), 0)));
    }
    CHECK(p.edge_count() == pairs);
  }
}

TEST_CASE("removing a typed edge never grows the projection") {
  const auto g = oracle::random_digraph(60, 3.0, 99);
  const std::size_t base = g.projection().edge_count();
  for (std::size_t drop = 0; drop < g.edge_count(); drop += 7) {
    const Edge dropped = g.edges()[drop];
    const auto h = g.subgraph(std::vector<bool>(g.node_count(), true), [&](const Edge& e) { return !(e == dropped); });
    CHECK(h.edge_count() == g.edge_count() - 1);
    CHECK(h.projection().edge_count() <= base);
  }
}

TEST_CASE("deduplicated and raw edge multisets build identical graphs") {
  std::vector<std::tuple<int, int, RefType>> edges = {{0, 1, RefType::legal_basis}, {1, 2, RefType::other},
                                                      {0, 1, RefType::legal_basis}, {2, 0, RefType::legal_basis},
                                                      {1, 2, RefType::other},       {1, 2, RefType::legal_basis}};
  const auto raw = oracle::make_graph(3, edges);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::reverse(edges.begin(), edges.end());
  const auto clean = oracle::make_graph(3, edges);
  CHECK(isomorphic(raw, clean));
  CHECK(raw.edge_count() == 4);
  CHECK(edge_triples(raw) == edge_triples(clean));
}

TEST_CASE("isomorphism compares ids, attributes and typed edges") {
  const auto a = oracle::make_graph(3, {{0, 1}, {1, 2}});
  CHECK(isomorphic(a, oracle::make_graph(3, {{1, 2}, {0, 1}})));
  CHECK_FALSE(isomorphic(a, oracle::make_graph(3, {{0, 1}, {2, 1}})));
  CHECK_FALSE(isomorphic(a, oracle::make_graph(3, {{0, 1, RefType::instruments_cited}, {1, 2, RefType::other}})));
  CHECK_FALSE(isomorphic(a, oracle::make_graph(3, {{0, 1, RefType::instruments_cited}, {1, 2, RefType::instruments_cited}},
                                               {3, 3, 1})));
}
