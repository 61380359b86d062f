#include <cmath>
#include <random>

#include "doctest.h"
#include "legnet/error.hpp"
#include "legnet/powerlaw.hpp"
#include "oracles.hpp"

using namespace legnet;

namespace {

std::vector<std::uint64_t> sample(double gamma, std::uint64_t x_min, std::size_t n, std::uint64_t seed) {
  oracle::PowerLawSampler s(gamma, x_min);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& v : out) v = s(rng);
  return out;
}

double ks_brute(std::vector<std::uint64_t> sorted, double gamma, std::uint64_t x_min) {
  std::erase_if(sorted, [&](auto v) { return v < x_min; });
  const double norm = hurwitz_zeta(gamma, static_cast<double>(x_min));
  const double n = static_cast<double>(sorted.size());
  double cdf = 0, worst = 0;
  std::size_t i = 0;
  for (std::uint64_t x = x_min; x <= sorted.back(); ++x) {
    cdf += std::pow(static_cast<double>(x), -gamma) / norm;
    while (i < sorted.size() && sorted[i] <= x) ++i;
    worst = std::max(worst, std::abs(static_cast<double>(i) / n - cdf));
  }
  return worst;
}

}  // namespace

TEST_CASE("hurwitz zeta") {
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-12));
  CHECK(hurwitz_zeta(4.0, 1.0) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-12));
  CHECK(hurwitz_zeta(2.0, 3.0) == doctest::Approx(M_PI * M_PI / 6 - 1 - 0.25).epsilon(1e-12));
  double direct = 0;
  for (int k = 0; k < 2000000; ++k) direct += std::pow(k + 7.5, -3.3);
  CHECK(hurwitz_zeta(3.3, 7.5) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("discrete power law sampler") {
  DiscretePowerLaw law(2.5, 3);
  CHECK(law.ccdf(3) == doctest::Approx(1.0));
  CHECK(law.ccdf(10) == doctest::Approx(hurwitz_zeta(2.5, 10) / hurwitz_zeta(2.5, 3)));
  CHECK(law(0.0) == 3);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::size_t at_least_10 = 0;
  const std::size_t n = 200000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = law(u(rng));
    CHECK_UNARY(v >= 3);
    at_least_10 += v >= 10;
  }
  CHECK(static_cast<double>(at_least_10) / n == doctest::Approx(law.ccdf(10)).epsilon(0.03));
}

TEST_CASE("ks distance matches direct evaluation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto xs = sample(2.3, 1, 3000, seed);
    std::sort(xs.begin(), xs.end());
    for (std::uint64_t x_min : {1, 2, 5}) {
      CHECK(ks_distance(xs, 2.3, x_min) == doctest::Approx(ks_brute(xs, 2.3, x_min)).epsilon(1e-9));
      CHECK(ks_distance(xs, 2.7, x_min) == doctest::Approx(ks_brute(xs, 2.7, x_min)).epsilon(1e-9));
    }
  }
}

TEST_CASE("fit recovers the exponent") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto xs = sample(2.5, 5, 10000, 50 + seed);
    const auto fit = fit_power_law(xs);
    CHECK(fit.gamma >= 2.4);
    CHECK(fit.gamma <= 2.6);
    CHECK(fit.x_min >= 2);
    CHECK(fit.x_min <= 8);
    CHECK(fit.n == xs.size());
    CHECK(fit.n_tail >= 25);
    PowerLawOptions exact;
    exact.exact_mle = true;
    CHECK(fit_power_law(xs, exact).gamma == doctest::Approx(2.5).epsilon(0.04));
  }
}

TEST_CASE("exact MLE is unbiased down to x_min = 1") {
  PowerLawOptions exact;
  exact.exact_mle = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(fit_power_law(sample(2.5, 1, 10000, 70 + seed), exact).gamma == doctest::Approx(2.5).epsilon(0.02));
}

TEST_CASE("refitting the chosen tail is scale-consistent") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto xs = sample(2.3, 3, 5000, 90 + seed);
    const auto fit = fit_power_law(xs);
    std::vector<std::uint64_t> tail;
    for (auto v : xs)
      if (v >= fit.x_min) tail.push_back(v);
    const auto again = fit_power_law(tail);
    CHECK(again.x_min >= fit.x_min);
    if (again.x_min == fit.x_min) CHECK(std::abs(again.gamma - fit.gamma) < 1e-9);
  }
}

TEST_CASE("zeros are dropped and reported") {
  auto xs = sample(2.2, 1, 2000, 9);
  const auto base = fit_power_law(xs);
  xs.insert(xs.end(), 300, 0);
  const auto fit = fit_power_law(xs);
  CHECK(fit.excluded_zeros == 300);
  CHECK(fit.gamma == base.gamma);
  CHECK(fit.x_min == base.x_min);
}

TEST_CASE("fit errors") {
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint64_t>(10, 3)), ComputeError);
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint64_t>(500, 3)), ComputeError);
  CHECK_THROWS_AS(fit_power_law(std::vector<std::uint64_t>(500, 0)), ComputeError);
}

TEST_CASE("bootstrap is seeded and accepts power-law data") {
  const auto xs = sample(2.5, 5, 3000, 21);
  const auto fit = fit_power_law(xs);
  const auto a = goodness_of_fit(xs, fit, 100, 5);
  const auto b = goodness_of_fit(xs, fit, 100, 5);
  CHECK(a.p_value == b.p_value);
  CHECK(a.gamma_spread == b.gamma_spread);
  CHECK(a.bootstrap_m == 100);
  CHECK(a.low_resolution);
  CHECK(a.p_value > 0.05);
  CHECK(a.gamma_spread > 0.0);
  CHECK(a.gamma == fit.gamma);
}

TEST_CASE("bootstrap rejects a lognormal bulk") {
  std::mt19937_64 rng(4);
  std::lognormal_distribution<double> ln(2.0, 0.6);
  std::vector<std::uint64_t> xs(5000);
  for (auto& v : xs) v = 1 + static_cast<std::uint64_t>(ln(rng));
  PowerLawOptions o;
  o.min_tail = 1000;
  const auto fit = fit_power_law(xs, o);
  CHECK(goodness_of_fit(xs, fit, 100, 1, o).p_value < 0.1);
}

TEST_CASE("ccdf") {
  const std::vector<std::uint64_t> xs = {1, 1, 2, 5};
  const auto c = ccdf(xs);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == std::pair<std::uint64_t, double>{1, 1.0});
  CHECK(c[1] == std::pair<std::uint64_t, double>{2, 0.5});
  CHECK(c[2] == std::pair<std::uint64_t, double>{5, 0.25});
}
