#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace legnet {

inline constexpr std::size_t kDefaultBootstrapReplicas = 2500;

/// Hurwitz zeta  sum_{k>=0} (k + q)^-s  for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

struct PowerLawOptions {
  /// Candidate thresholds must leave at least this many tail observations.
  std::size_t min_tail = 25;
  /// Minimum number of positive observations accepted.
  std::size_t min_observations = 50;
  /// Refine the closed-form estimate with the exact discrete (zeta) MLE.
  bool exact_mle = false;
};

struct PowerLawFit {
  double gamma = 0;
  std::uint64_t x_min = 0;
  std::size_t n_tail = 0;
  double ks_statistic = 0;
  std::size_t n = 0;               // positive observations used
  std::size_t excluded_zeros = 0;  // zero values dropped before fitting
};

/// Discrete power-law fit. Every distinct observed value with a large enough
/// tail is tried as x_min; gamma comes from the approximate discrete MLE
///   gamma = 1 + n_tail / sum ln(x_i / (x_min - 1/2))
/// and the candidate with the smallest Kolmogorov-Smirnov distance between
/// the empirical and fitted tail CDFs wins. Zeros are dropped first.
/// Throws ComputeError on too few observations or all-equal input.
PowerLawFit fit_power_law(std::span<const std::uint64_t> values, const PowerLawOptions& options = {});

/// KS distance between the tail (x >= x_min) of `sorted` and a discrete power
/// law with the given exponent. `sorted` must be ascending.
double ks_distance(std::span<const std::uint64_t> sorted, double gamma, std::uint64_t x_min);

/// Exact discrete power law on x >= x_min: P(x) = x^-gamma / zeta(gamma, x_min).
/// Values up to x_min + table_size are drawn by inverse-CDF lookup, the rest
/// from the continuous approximation.
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(double gamma, std::uint64_t x_min, std::size_t table_size = 100000);
  std::uint64_t operator()(double u) const;  // u uniform in [0, 1)
  double ccdf(std::uint64_t x) const;        // P(X >= x)

 private:
  double gamma_;
  std::uint64_t x_min_;
  double norm_;
  std::vector<double> cdf_;  // cdf_[i] = P(X <= x_min + i)
};

struct FitResult {
  double gamma = 0;
  double gamma_spread = 0;  // bootstrap standard deviation
  std::uint64_t x_min = 0;
  double x_min_spread = 0;
  std::size_t n_tail = 0;
  double n_tail_spread = 0;
  double ks_statistic = 0;
  double p_value = 0;
  std::size_t bootstrap_m = 0;
  std::size_t n = 0;
  std::size_t excluded_zeros = 0;
  /// Replicas whose refit failed; they count as poorer fits.
  std::size_t failed_replicas = 0;
  /// p-value resolution is coarser than the 2500-replica reference.
  bool low_resolution = false;
};

/// Semi-parametric bootstrap: each replica draws from the fitted power law
/// with probability n_tail/n and otherwise resamples the observations below
/// x_min, then refits from scratch. p = fraction of replicas whose KS is at
/// least the observed KS. Replicas use derived seeds, so the result does not
/// depend on thread count.
FitResult goodness_of_fit(std::span<const std::uint64_t> values, const PowerLawFit& fit, std::size_t m,
                          std::uint64_t seed, const PowerLawOptions& options = {});

/// Complementary CDF: (k, fraction of values >= k) for every distinct k, ascending.
std::vector<std::pair<std::uint64_t, double>> ccdf(std::span<const std::uint64_t> values);

}  // namespace legnet
