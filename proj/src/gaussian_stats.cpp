#include "reldens/gaussian_stats.hpp"

#include <boost/math/distributions/binomial.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reldens {

double phi_cdf(double z) {
  // erfc keeps full relative accuracy in the lower tail, unlike 1 + erf.
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

EvaluableCDF standard_normal() { return EvaluableCDF{[](double z) { return phi_cdf(z); }, std::nullopt}; }

BigInt binomial_coefficient(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= (m - k + i);
    c /= i;
  }
  return c;
}

Rational binomial_pmf_exact(std::uint64_t m, std::int64_t k) {
  if (m > 64) throw std::invalid_argument("exact binomial mode requires m <= 64");
  if (k < 0 || static_cast<std::uint64_t>(k) > m) return Rational(0);
  return Rational(binomial_coefficient(m, static_cast<std::uint64_t>(k)), BigInt(1) << static_cast<unsigned>(m));
}

double binomial_pmf(std::uint64_t m, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > m) return 0.0;
  if (m <= 64) {
    const auto c = binomial_coefficient(m, static_cast<std::uint64_t>(k)).convert_to<double>();
    return std::ldexp(c, -static_cast<int>(m));
  }
  const boost::math::binomial_distribution<double> law(static_cast<double>(m), 0.5);
  return boost::math::pdf(law, static_cast<double>(k));
}

EvaluableCDF standardized_binomial_cdf(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("binomial law needs m >= 1");
  std::vector<double> cumulative(m + 1);
  double acc = 0.0;
  for (std::uint64_t k = 0; k <= m; ++k) {
    acc += binomial_pmf(m, static_cast<std::int64_t>(k));
    cumulative[k] = acc;
  }
  cumulative.back() = 1.0;
  const double mean = static_cast<double>(m) / 2.0;
  const double sd = std::sqrt(static_cast<double>(m) / 4.0);
  auto eval = [cumulative, mean, sd, m](double z) {
    const double k = std::floor(mean + z * sd + 1e-12);
    if (k < 0.0) return 0.0;
    if (k >= static_cast<double>(m)) return 1.0;
    return cumulative[static_cast<std::size_t>(k)];
  };
  return EvaluableCDF{eval, Interval{-mean / sd, mean / sd}};
}

double ks_distance(const EvaluableCDF& F, const EvaluableCDF& G, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  double worst = 0.0;
  for (double z : grid) {
    if (!std::isfinite(z)) throw std::invalid_argument("non-finite grid point");
    worst = std::max(worst, std::abs(F(z) - G(z)));
  }
  return worst;
}

std::vector<double> with_left_limits(std::span<const double> jumps) {
  std::vector<double> out;
  out.reserve(2 * jumps.size());
  for (double z : jumps) {
    out.push_back(std::nextafter(z, -INFINITY));
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace reldens
