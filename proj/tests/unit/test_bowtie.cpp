#include <algorithm>
#include <set>

#include "doctest.h"
#include "legnet/bowtie.hpp"
#include "legnet/error.hpp"
#include "legnet/generator.hpp"
#include "oracles.hpp"

using namespace legnet;

namespace {

std::vector<int> codes(const BowTieDecomposition& d) {
  std::vector<int> out;
  for (auto r : d.region) out.push_back(static_cast<int>(r));
  return out;
}

}  // namespace

TEST_CASE("textbook bow-tie") {
  // core 0<->1, in 2->0, out 1->3, tube 2->4->3, tendril 2->5, tendril 6->3, island 7->8
  const auto g = oracle::make_graph(9, {{0, 1}, {1, 0}, {2, 0}, {1, 3}, {2, 4}, {4, 3}, {2, 5}, {6, 3}, {7, 8}});
  const auto d = decompose(g);
  CHECK(d.of(BowTieRegion::core) == std::vector<NodeIndex>{0, 1});
  CHECK(d.of(BowTieRegion::in) == std::vector<NodeIndex>{2});
  CHECK(d.of(BowTieRegion::out) == std::vector<NodeIndex>{3});
  CHECK(d.of(BowTieRegion::tubes) == std::vector<NodeIndex>{4});
  CHECK(d.of(BowTieRegion::tendrils) == std::vector<NodeIndex>{5, 6});
  CHECK(d.of(BowTieRegion::disconnected) == std::vector<NodeIndex>{7, 8});
  CHECK(d.fraction(BowTieRegion::core) == doctest::Approx(2.0 / 9));
  CHECK(region_name(BowTieRegion::tendrils) == "tendrils");
}

TEST_CASE("regions partition the nodes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_digraph(60, 1.2, seed);
    const auto d = decompose(g);
    std::set<NodeIndex> all;
    double total = 0;
    for (auto r : kAllRegions) {
      for (NodeIndex v : d.of(r)) {
        CHECK(all.insert(v).second);
        CHECK(d.region[v] == r);
      }
      total += d.fraction(r);
    }
    CHECK(all.size() == g.node_count());
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("decomposition matches closure brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 10 + seed % 50;
    const double density = 0.6 + 0.05 * static_cast<double>(seed % 20);
    const auto g = oracle::random_digraph(n, density, 1000 + seed);
    CHECK(codes(decompose(g)) == oracle::bowtie_regions(g));
  }
}

TEST_CASE("strong components") {
  const auto g = oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}, {2, 3}});
  const auto [labels, count] = strong_component_labels(g);
  CHECK(count == 3);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[1] == labels[2]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[0] != labels[3]);
  CHECK(labels[5] != labels[3]);
  CHECK(largest_strong_component(g) == std::vector<NodeIndex>{0, 1, 2});
  // equal-size cycles: the one holding the smallest id wins
  const auto tie = oracle::make_graph(4, {{2, 3}, {3, 2}, {0, 1}, {1, 0}});
  CHECK(largest_strong_component(tie) == std::vector<NodeIndex>{0, 1});
}

TEST_CASE("acyclic graph has a singleton core") {
  const auto g = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto d = decompose(g);
  CHECK(d.of(BowTieRegion::core).size() == 1);
  CHECK(codes(d) == oracle::bowtie_regions(g));
}

TEST_CASE("deep chains do not overflow") {
  std::vector<std::pair<int, int>> edges;
  const int n = 200000;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  const auto g = oracle::make_graph(n, edges);
  CHECK(decompose(g).of(BowTieRegion::core).size() == static_cast<std::size_t>(n));
}

TEST_CASE("empty graph and snapshot series") {
  CHECK_THROWS_AS(decompose(oracle::make_graph(0, std::vector<std::pair<int, int>>{})), ComputeError);
  std::vector<std::pair<int, LegislationGraph>> series;
  series.emplace_back(1990, oracle::make_graph(0, std::vector<std::pair<int, int>>{}));
  series.emplace_back(1991, oracle::make_graph(4, {{0, 1}, {1, 0}, {2, 0}}));
  const auto pts = core_gc_series(series);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].scc_fraction == 0.0);
  CHECK(pts[0].gc_fraction == 0.0);
  CHECK(pts[1].year == 1991);
  CHECK(pts[1].scc_fraction == doctest::Approx(0.5));
  CHECK(pts[1].gc_fraction == doctest::Approx(0.75));
}
