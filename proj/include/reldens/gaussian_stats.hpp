#pragma once

// Reference laws (standard normal, symmetric binomial) and the grid-based
// sup-distance used to compare distribution functions.

#include "reldens/core.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace reldens {

/// A distribution function z -> [0, 1] with an optional bounded support.
struct EvaluableCDF {
  std::function<double(double)> eval;
  std::optional<Interval> support;

  double operator()(double z) const { return eval(z); }
};

/// Standard normal distribution function, absolute error below 1e-15.
double phi_cdf(double z);

EvaluableCDF standard_normal();

/// C(m, k) 2^-m. Out-of-range k has zero mass.
double binomial_pmf(std::uint64_t m, std::int64_t k);

/// Exact C(m, k) / 2^m. Requires m <= 64.
Rational binomial_pmf_exact(std::uint64_t m, std::int64_t k);

/// C(m, k) as a big integer.
BigInt binomial_coefficient(std::uint64_t m, std::uint64_t k);

/// Distribution function of (Binomial(m, 1/2) - m/2) / sqrt(m/4).
EvaluableCDF standardized_binomial_cdf(std::uint64_t m);

/// max over grid of |F(z) - G(z)|. For step functions the caller must place
/// points on both sides of every jump (see with_left_limits).
double ks_distance(const EvaluableCDF& F, const EvaluableCDF& G, std::span<const double> grid);

/// Returns the points together with their immediate left neighbours
/// (nextafter towards -inf), sorted. Feeding this grid to ks_distance sees both
/// one-sided limits of a step function jumping at `jumps`.
std::vector<double> with_left_limits(std::span<const double> jumps);

/// n points evenly spaced over [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace reldens
