#include "legnet/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "legnet/error.hpp"
#include "legnet/parallel.hpp"
#include "legnet/random.hpp"

namespace legnet {
namespace {

// Bernoulli numbers B2..B14.
constexpr double kBernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};

// Gaps up to this length are bridged by summing pmf terms instead of a fresh
// zeta evaluation.
constexpr std::uint64_t kBridge = 32;

double negative_log_likelihood(double gamma, std::uint64_t x_min, std::size_t n_tail, double sum_log) {
  return static_cast<double>(n_tail) * std::log(hurwitz_zeta(gamma, static_cast<double>(x_min))) +
         gamma * sum_log;
}

double exact_mle(std::uint64_t x_min, std::size_t n_tail, double sum_log, double start) {
  // Golden-section search around the closed-form estimate.
  double lo = std::max(1.0 + 1e-6, start - 1.0), hi = start + 1.0;
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
  double fa = negative_log_likelihood(a, x_min, n_tail, sum_log);
  double fb = negative_log_likelihood(b, x_min, n_tail, sum_log);
  for (int i = 0; i < 80 && hi - lo > 1e-10; ++i) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = negative_log_likelihood(a, x_min, n_tail, sum_log);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = negative_log_likelihood(b, x_min, n_tail, sum_log);
    }
  }
  return (lo + hi) / 2;
}

double sample_std(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

double hurwitz_zeta(double s, double q) {
  // Euler-Maclaurin summation after shifting q to at least max(10, s).
  double sum = 0;
  double a = q;
  const double shift = std::max(10.0, s);
  while (a < shift) {
    sum += std::pow(a, -s);
    a += 1;
  }
  const double a_pow = std::pow(a, -s);
  sum += a * a_pow / (s - 1) + a_pow / 2;
  double factor = s * a_pow / a / 2;  // s * a^(-s-1) / 2!
  const double inv_a2 = 1 / (a * a);
  for (int j = 1; j <= 7; ++j) {
    if (j > 1) {
      const double k = 2.0 * j;
      factor *= (s + k - 3) * (s + k - 2) / ((k - 1) * k) * inv_a2;
    }
    sum += kBernoulli[j - 1] * factor;
  }
  return sum;
}

double ks_distance(std::span<const std::uint64_t> sorted, double gamma, std::uint64_t x_min) {
  const auto first = std::lower_bound(sorted.begin(), sorted.end(), x_min);
  const std::size_t n_tail = static_cast<std::size_t>(sorted.end() - first);
  if (n_tail == 0) return 1.0;
  const double norm = hurwitz_zeta(gamma, static_cast<double>(x_min));
  // upper = zeta(gamma, covered), so the model CDF at covered - 1 is 1 - upper / norm.
  double upper = norm;
  std::uint64_t covered = x_min;
  double worst = 0;
  double empirical = 0;
  const auto advance = [&](std::uint64_t to) {
    if (to - covered <= kBridge) {
      for (std::uint64_t k = covered; k < to; ++k) upper -= std::pow(static_cast<double>(k), -gamma);
    } else {
      upper = hurwitz_zeta(gamma, static_cast<double>(to));
    }
    covered = to;
  };
  for (auto it = first; it != sorted.end();) {
    const std::uint64_t x = *it;
    auto next = std::upper_bound(it, sorted.end(), x);
    if (x > covered) {
      // Largest model value inside the gap, where the empirical CDF is flat.
      advance(x);
      worst = std::max(worst, std::abs(empirical - (1.0 - upper / norm)));
    }
    advance(x + 1);
    empirical = static_cast<double>(next - first) / static_cast<double>(n_tail);
    worst = std::max(worst, std::abs(empirical - (1.0 - upper / norm)));
    it = next;
  }
  return worst;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& options) {
  std::vector<std::uint64_t> sorted;
  sorted.reserve(values.size());
  std::size_t zeros = 0;
  for (std::uint64_t v : values) {
    if (v == 0) {
      ++zeros;
    } else {
      sorted.push_back(v);
    }
  }
  if (sorted.size() < options.min_observations) {
    throw ComputeError("heavytail-fit", "power-law fit needs at least " +
                                            std::to_string(options.min_observations) +
                                            " positive observations, got " + std::to_string(sorted.size()));
  }
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) {
    throw ComputeError("heavytail-fit", "degenerate input: all observations are equal");
  }
  const std::size_t n = sorted.size();

  // suffix_log[i] = sum of ln(sorted[j]) for j >= i
  std::vector<double> suffix_log(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix_log[i] = suffix_log[i + 1] + std::log(static_cast<double>(sorted[i]));

  PowerLawFit best;
  best.ks_statistic = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n;) {
    const std::uint64_t x_min = sorted[i];
    const std::size_t n_tail = n - i;
    if (n_tail < options.min_tail) break;
    const double sum_log = suffix_log[i];
    const double denominator = sum_log - static_cast<double>(n_tail) * std::log(static_cast<double>(x_min) - 0.5);
    double gamma = 1.0 + static_cast<double>(n_tail) / denominator;
    if (options.exact_mle) gamma = exact_mle(x_min, n_tail, sum_log, gamma);
    const double ks = ks_distance(sorted, gamma, x_min);
    if (ks < best.ks_statistic) {
      best.gamma = gamma;
      best.x_min = x_min;
      best.n_tail = n_tail;
      best.ks_statistic = ks;
    }
    i = static_cast<std::size_t>(std::upper_bound(sorted.begin() + static_cast<std::ptrdiff_t>(i), sorted.end(), x_min) -
                                 sorted.begin());
  }
  if (!std::isfinite(best.ks_statistic)) {
    throw ComputeError("heavytail-fit", "no threshold leaves a tail of " + std::to_string(options.min_tail) +
                                            " observations");
  }
  best.n = n;
  best.excluded_zeros = zeros;
  return best;
}

DiscretePowerLaw::DiscretePowerLaw(double gamma, std::uint64_t x_min, std::size_t table_size)
    : gamma_(gamma), x_min_(x_min), norm_(hurwitz_zeta(gamma, static_cast<double>(x_min))) {
  cdf_.resize(table_size);
  double running = 0;
  for (std::size_t i = 0; i < table_size; ++i) {
    running += std::pow(static_cast<double>(x_min + i), -gamma);
    cdf_[i] = running / norm_;
  }
}

std::uint64_t DiscretePowerLaw::operator()(double u) const {
  if (u < cdf_.back()) {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return x_min_ + static_cast<std::uint64_t>(it - cdf_.begin());
  }
  const double rest = (u - cdf_.back()) / (1.0 - cdf_.back());
  const double start = static_cast<double>(x_min_ + cdf_.size()) - 0.5;
  const double x = start * std::pow(1.0 - std::min(rest, 1.0 - 1e-16), -1.0 / (gamma_ - 1.0));
  if (!(x < 1e18)) return static_cast<std::uint64_t>(1e18);
  return std::max<std::uint64_t>(x_min_ + cdf_.size(), static_cast<std::uint64_t>(std::floor(x + 0.5)));
}

double DiscretePowerLaw::ccdf(std::uint64_t x) const {
  if (x <= x_min_) return 1.0;
  return hurwitz_zeta(gamma_, static_cast<double>(x)) / norm_;
}

FitResult goodness_of_fit(std::span<const std::uint64_t> values, const PowerLawFit& fit, std::size_t m,
                          std::uint64_t seed, const PowerLawOptions& options) {
  if (m < 1) throw ConfigError("heavytail-fit", "bootstrap needs at least one replica");
  std::vector<std::uint64_t> below;
  std::size_t n = 0;
  for (std::uint64_t v : values) {
    if (v == 0) continue;
    ++n;
    if (v < fit.x_min) below.push_back(v);
  }
  std::sort(below.begin(), below.end());
  const double tail_probability = static_cast<double>(fit.n_tail) / static_cast<double>(n);
  const DiscretePowerLaw sampler(fit.gamma, fit.x_min);

  struct Replica {
    bool ok = false;
    double ks = 0;
    double gamma = 0;
    double x_min = 0;
    double n_tail = 0;
  };
  std::vector<Replica> replicas(m);
  parallel_for(m, [&](std::size_t r) {
    Rng rng(derive_seed(seed, "powerlaw-bootstrap", r));
    std::vector<std::uint64_t> synthetic(n);
    for (auto& x : synthetic) {
      if (below.empty() || rng.uniform() < tail_probability) {
        x = sampler(rng.uniform());
      } else {
        x = below[rng.below(below.size())];
      }
    }
    try {
      const PowerLawFit refit = fit_power_law(synthetic, options);
      replicas[r] = {true, refit.ks_statistic, refit.gamma, static_cast<double>(refit.x_min),
                     static_cast<double>(refit.n_tail)};
    } catch (const ComputeError&) {
      replicas[r] = {};
    }
  });

  FitResult out;
  out.gamma = fit.gamma;
  out.x_min = fit.x_min;
  out.n_tail = fit.n_tail;
  out.ks_statistic = fit.ks_statistic;
  out.n = fit.n;
  out.excluded_zeros = fit.excluded_zeros;
  out.bootstrap_m = m;
  out.low_resolution = m < kDefaultBootstrapReplicas;
  std::size_t poorer = 0;
  std::vector<double> gammas, x_mins, tails;
  for (const Replica& r : replicas) {
    if (!r.ok) {
      ++out.failed_replicas;
      ++poorer;
      continue;
    }
    if (r.ks >= fit.ks_statistic) ++poorer;
    gammas.push_back(r.gamma);
    x_mins.push_back(r.x_min);
    tails.push_back(r.n_tail);
  }
  out.p_value = static_cast<double>(poorer) / static_cast<double>(m);
  out.gamma_spread = sample_std(gammas);
  out.x_min_spread = sample_std(x_mins);
  out.n_tail_spread = sample_std(tails);
  return out;
}

std::vector<std::pair<std::uint64_t, double>> ccdf(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::uint64_t, double>> out;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    out.emplace_back(sorted[i], static_cast<double>(sorted.size() - i) / n);
    i = static_cast<std::size_t>(std::upper_bound(sorted.begin() + static_cast<std::ptrdiff_t>(i), sorted.end(), sorted[i]) -
                                 sorted.begin());
  }
  return out;
}

}  // namespace legnet
