#include <set>

#include "doctest.h"
#include "legnet/error.hpp"
#include "legnet/generator.hpp"
#include "legnet/random_models.hpp"
#include "oracles.hpp"

using namespace legnet;

TEST_CASE("erdos-renyi has exactly m distinct edges") {
  const auto g = erdos_renyi(300, 1200, 3);
  CHECK(g.node_count() == 300);
  CHECK(g.edge_count() == 1200);
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const auto& e : g.edges()) {
    CHECK(e.source != e.target);
    seen.emplace(e.source, e.target);
  }
  CHECK(seen.size() == 1200);
  CHECK(g.document(0).id.str() == "ER0000000");
}

TEST_CASE("erdos-renyi is seeded") {
  const auto a = erdos_renyi(100, 400, 8), b = erdos_renyi(100, 400, 8), c = erdos_renyi(100, 400, 9);
  CHECK(isomorphic(a, b));
  bool differ = false;
  for (std::size_t i = 0; i < a.edge_count(); ++i)
    differ |= a.edges()[i].source != c.edges()[i].source || a.edges()[i].target != c.edges()[i].target;
  CHECK(differ);
}

TEST_CASE("erdos-renyi limits") {
  CHECK(erdos_renyi(5, 20, 1).edge_count() == 20);
  CHECK_THROWS_AS(erdos_renyi(5, 21, 1), ConfigError);
  CHECK(erdos_renyi(4, 0, 1).edge_count() == 0);
}

TEST_CASE("giant component metrics") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < 10; ++i) edges.emplace_back(i, 0);
  edges.emplace_back(10, 11);
  const auto m = giant_component_metrics(oracle::make_graph(12, edges), 1000, 10, 1);
  CHECK(m.size == 10);
  CHECK(m.average_path_length == doctest::Approx(1.8));
  CHECK(m.clustering == 0.0);
  CHECK_FALSE(m.sampled);
  CHECK(giant_component_metrics(oracle::make_graph(12, edges), 5, 4, 1).sampled);
}

TEST_CASE("growth model is small-world, ER is not") {
  GeneratorConfig c;
  c.first_year = 1981;
  c.last_year = 2000;
  c.docs_per_year = 150;
  const auto g = generate(c);
  SmallWorldOptions o;
  o.replicas = 3;
  o.seed = 11;
  const auto r = small_world_compare(g, o);
  CHECK(r.small_world_verdict);
  CHECK(r.rand_replicas == 3);
  CHECK(r.c_net > 10 * r.c_rand);
  CHECK(r.c_rand_analytic > 0);
  CHECK(r.l_rand_analytic > 0);
  const auto again = small_world_compare(g, o);
  CHECK(again.l_rand == r.l_rand);
  CHECK(again.c_rand == r.c_rand);

  const auto er = erdos_renyi(g.node_count(), g.edge_count(), 2);
  CHECK_FALSE(small_world_compare(er, o).small_world_verdict);
}

TEST_CASE("small-world needs a giant component") {
  CHECK_THROWS_AS(small_world_compare(oracle::make_graph(8, {{0, 1}, {1, 2}})), ComputeError);
}
