#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "legnet/error.hpp"
#include "legnet/generator.hpp"
#include "legnet/metrics.hpp"
#include "oracles.hpp"

using namespace legnet;

namespace {

LegislationGraph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(i, 0);
  return oracle::make_graph(static_cast<std::size_t>(leaves) + 1, edges);
}

LegislationGraph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return oracle::make_graph(static_cast<std::size_t>(n), edges);
}

LegislationGraph clique(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return oracle::make_graph(static_cast<std::size_t>(n), edges);
}

double pearson_oracle(const LegislationGraph& g) {
  const auto adj = oracle::undirected_adjacency(g);
  std::vector<double> deg(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) deg[i] = std::accumulate(adj[i].begin(), adj[i].end(), 0.0);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = 0; j < adj.size(); ++j)
      if (adj[i][j]) xs.push_back(deg[i]), ys.push_back(deg[j]);
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n, my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::map<std::size_t, std::uint64_t> fw_histogram(const LegislationGraph& g, const std::vector<NodeIndex>& gc) {
  const auto d = oracle::floyd_warshall(g);
  std::map<std::size_t, std::uint64_t> hist;
  for (NodeIndex a : gc)
    for (NodeIndex b : gc)
      if (a != b && d[a][b] < oracle::kInf) ++hist[static_cast<std::size_t>(d[a][b])];
  return hist;
}

}  // namespace

TEST_CASE("degree statistics") {
  const auto cycle = oracle::make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto s = degree_stats(cycle, Direction::in);
  CHECK(s.n == 3);
  CHECK(s.mean == 1.0);
  CHECK(s.stddev == 0.0);
  CHECK(s.max == 1);
  const auto st = degree_stats(star(9), Direction::in);
  CHECK(st.max == 9);
  CHECK(st.mean == doctest::Approx(0.9));
  CHECK(st.histogram.at(0) == 9);
  CHECK(st.histogram.at(9) == 1);
  CHECK_THROWS_AS(degree_stats(oracle::make_graph(0, std::vector<std::pair<int, int>>{}), Direction::in), ComputeError);
}

TEST_CASE("histogram sums to n and reproduces the mean") {
  const auto g = oracle::random_digraph(150, 2.0, 5);
  for (Direction d : {Direction::in, Direction::out, Direction::total}) {
    const auto s = degree_stats(g, d);
    std::size_t count = 0;
    double weighted = 0;
    for (auto [k, c] : s.histogram) count += c, weighted += static_cast<double>(k * c);
    CHECK(count == s.n);
    CHECK(weighted / static_cast<double>(s.n) == doctest::Approx(s.mean));
  }
}

TEST_CASE("preferential growth gives a dispersed in-degree") {
  GeneratorConfig c;
  c.first_year = 1961;
  c.last_year = 2010;
  c.docs_per_year = 200;
  c.preferential_mixing = 1.0;
  const auto s = degree_stats(generate(c), Direction::in);
  CHECK(s.n == 10000);
  CHECK(s.stddev > 3 * s.mean);
}

TEST_CASE("gini special cases") {
  const std::vector<std::size_t> skew = {0, 0, 0, 10};
  CHECK(lorenz_gini(skew).gini == 0.75);
  const std::vector<std::size_t> equal(17, 4);
  const auto eq = lorenz_gini(equal);
  CHECK(eq.gini == 0.0);
  for (const auto& [x, y] : eq.lorenz_points) CHECK(x == doctest::Approx(y));
  const auto zeros = lorenz_gini(std::vector<std::size_t>(5, 0));
  CHECK(zeros.all_zero);
  CHECK(zeros.gini == 0.0);
}

TEST_CASE("gini equals the double-sum definition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 2000;
    std::vector<std::size_t> x(n);
    const bool heavy = trial % 2;
    for (auto& v : x) v = heavy ? static_cast<std::size_t>(std::pow(1.0 - std::uniform_real_distribution<double>(0, 1)(rng), -1.2)) : rng() % 50;
    if (std::all_of(x.begin(), x.end(), [](std::size_t v) { return v == 0; })) x[0] = 1;
    CHECK(std::abs(lorenz_gini(x).gini - oracle::gini_double_sum(x)) < 1e-9);
  }
}

TEST_CASE("lorenz curve shape, top share and pareto point") {
  const std::vector<std::size_t> x = {1, 1, 1, 1, 6};
  const auto lg = lorenz_gini(x);
  REQUIRE(lg.lorenz_points.size() == 6);
  CHECK(lg.lorenz_points.front() == std::pair{0.0, 0.0});
  CHECK(lg.lorenz_points.back().first == doctest::Approx(1.0));
  CHECK(lg.lorenz_points.back().second == doctest::Approx(1.0));
  CHECK(lg.top1_share == doctest::Approx(0.6));
  CHECK(lg.pareto80_node_fraction == doctest::Approx(0.6));

  std::mt19937_64 rng(3);
  std::vector<std::size_t> y(500);
  for (auto& v : y) v = rng() % 30;
  const auto ly = lorenz_gini(y);
  for (std::size_t i = 1; i < ly.lorenz_points.size(); ++i) {
    CHECK(ly.lorenz_points[i].second >= ly.lorenz_points[i - 1].second);
    if (i + 1 < ly.lorenz_points.size()) {
      const auto [x0, y0] = ly.lorenz_points[i - 1];
      const auto [x1, y1] = ly.lorenz_points[i];
      const auto [x2, y2] = ly.lorenz_points[i + 1];
      CHECK((y2 - y1) / (x2 - x1) >= (y1 - y0) / (x1 - x0) - 1e-12);
    }
  }
  CHECK(ly.gini > 0.0);
  CHECK(ly.gini < 1.0);
}

TEST_CASE("clustering on small shapes") {
  const auto tri = clustering(clique(3));
  CHECK(tri.global_avg == 1.0);
  for (double c : tri.local) CHECK(c == 1.0);
  CHECK(clustering(path(3)).global_avg == 0.0);
  CHECK(clustering(clique(6)).global_avg == 1.0);
  CHECK(clustering(star(12)).global_avg == 0.0);
  CHECK(clustering(path(30)).global_avg == 0.0);
}

TEST_CASE("local clustering matches triangle enumeration") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_undirected(100, 0.02 + 0.01 * static_cast<double>(seed), seed);
    const auto local = local_clustering(g.projection());
    CHECK(local == oracle::brute_local_clustering(g));
  }
}

TEST_CASE("clustering per degree and log-log slope") {
  GeneratorConfig c;
  c.first_year = 1990;
  c.last_year = 2009;
  c.docs_per_year = 100;
  const auto profile = clustering(generate(c));
  double weighted = 0;
  std::size_t n = 0;
  for (const auto& [k, ck] : profile.per_degree) {
    CHECK(ck >= 0.0);
    CHECK(ck <= 1.0);
    weighted += ck * static_cast<double>(profile.per_degree_count.at(k));
    n += profile.per_degree_count.at(k);
  }
  CHECK(weighted / static_cast<double>(n) == doctest::Approx(profile.global_avg));
  CHECK(profile.slope_points >= 2);
  CHECK(profile.loglog_slope < 0.0);
  CHECK(std::isnan(clustering(clique(4)).loglog_slope));
}

TEST_CASE("components") {
  const auto g = oracle::make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto r = components(g);
  CHECK(r.gc_fraction == doctest::Approx(3.0 / 7));
  CHECK(r.isolated_count == 1);
  CHECK(r.component_count == 3);
  CHECK(r.giant_component == std::vector<NodeIndex>{0, 1, 2});
  CHECK(components(path(9)).gc_fraction == 1.0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = oracle::random_digraph(20 + seed * 6, 0.3 + 0.05 * static_cast<double>(seed), seed);
    const auto sizes = oracle::union_find_sizes(h);
    const auto rep = components(h);
    CHECK(rep.giant_component.size() == sizes.front());
    CHECK(rep.component_count == sizes.size());
  }
}

TEST_CASE("path metrics on small shapes") {
  const auto p5 = path_metrics(path(5));
  CHECK(p5.diameter == 4);
  CHECK(p5.average_path_length == 2.0);
  const auto k4 = path_metrics(clique(4));
  CHECK(k4.diameter == 1);
  CHECK(k4.average_path_length == 1.0);
  const auto s10 = path_metrics(star(9));
  CHECK(s10.diameter == 2);
  CHECK(s10.average_path_length == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(s10.restricted_to == "n00000");
  CHECK_THROWS_AS(path_metrics(oracle::make_graph(3, std::vector<std::pair<int, int>>{})), ComputeError);
}

TEST_CASE("exact paths match Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_digraph(100, 0.6 + 0.1 * static_cast<double>(seed), seed);
    const auto gc = components(g).giant_component;
    if (gc.size() < 2) continue;
    const auto pm = path_metrics(g);
    const auto expected = fw_histogram(g, gc);
    CHECK(pm.distance_histogram == expected);
    CHECK(pm.diameter == expected.rbegin()->first);
    CHECK_FALSE(pm.sampled);
  }
}

TEST_CASE("directed paths follow references forward") {
  const auto chain = path(3);
  PathOptions o;
  o.directed = true;
  const auto pm = path_metrics(chain, o);
  CHECK(pm.diameter == 2);
  CHECK(pm.average_path_length == doctest::Approx(4.0 / 3));
}

TEST_CASE("sampled paths are seeded and bounded") {
  GeneratorConfig c;
  c.first_year = 1990;
  c.last_year = 2009;
  c.docs_per_year = 100;
  const auto g = generate(c);
  PathOptions o;
  o.sample_sources = 200;
  o.seed = 5;
  const auto a = path_metrics(g, o), b = path_metrics(g, o);
  CHECK(a.sampled);
  CHECK(a.sources == 200);
  CHECK(a.distance_histogram == b.distance_histogram);
  const auto exact = path_metrics(g);
  CHECK(a.diameter <= exact.diameter);
  CHECK(a.average_path_length == doctest::Approx(exact.average_path_length).epsilon(0.05));
}

TEST_CASE("degree assortativity") {
  CHECK(assortativity(star(10), AssortativityCriterion::degree) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(assortativity(clique(5), AssortativityCriterion::degree), ComputeError);
  // K3 and K4 joined by one bridge.
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {2, 3}};
  const auto g = oracle::make_graph(7, edges);
  const double r = assortativity(g, AssortativityCriterion::degree);
  CHECK(r > 0.0);
  CHECK(r == doctest::Approx(pearson_oracle(g)).epsilon(1e-12));
  edges.pop_back();
  CHECK(assortativity(oracle::make_graph(7, edges), AssortativityCriterion::degree) == doctest::Approx(1.0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = oracle::random_digraph(80, 2.0, seed);
    CHECK(assortativity(h, AssortativityCriterion::degree) == doctest::Approx(pearson_oracle(h)).epsilon(1e-9));
  }
}

TEST_CASE("sector assortativity") {
  const auto same = oracle::make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {1, 1, 1, 3, 3, 3});
  CHECK(assortativity(same, AssortativityCriterion::sector) == doctest::Approx(1.0).epsilon(1e-12));
  const auto cross = oracle::make_graph(4, {{0, 1}, {2, 3}, {0, 3}}, {1, 3, 1, 3});
  CHECK(assortativity(cross, AssortativityCriterion::sector) < 0.0);
  CHECK_THROWS_AS(assortativity(oracle::make_graph(3, {{0, 1}, {1, 2}}), AssortativityCriterion::sector), ComputeError);
}
