#pragma once

// Relative distribution functions and averages of real sequences, discrete laws
// and their convolution, the arcsine law and cosine-sum statistics.

#include "reldens/gaussian_stats.hpp"
#include "reldens/sequence.hpp"

#include <map>
#include <span>
#include <vector>

namespace reldens {

/// Grid-sampled relative distribution function:
/// values[i] = |{n <= n_trunc : x_n <= grid[i]}| / n_trunc.
struct RelCDF {
  std::vector<double> grid;
  std::vector<double> values;
  std::uint64_t n_trunc = 0;
  double observed_min = 0.0;
  double observed_max = 0.0;

  /// Step function through the grid values (exact at grid points, 0 below the grid).
  EvaluableCDF as_evaluable() const;
};

/// One streaming pass over n = 1..n_trunc, counting x_n into the grid.
RelCDF relative_cdf(const RealSeq& x, std::uint64_t n_trunc, std::span<const double> grid);

struct AverageTrace {
  double value = 0.0;
  std::vector<std::pair<std::uint64_t, double>> checkpoints;
};

/// (1/N) sum x_n with compensated summation, traced at geometric N.
AverageTrace relative_average(const RealSeq& x, std::uint64_t n_trunc, std::size_t checkpoint_count = 16);

/// Riemann-Stieltjes sum of z dF over the grid cells, each cell (g_{i-1}, g_i]
/// tagged at its right end and the mass at or below g_0 placed at g_0.
double stieltjes_mean(const RelCDF& F);

/// Finitely supported law on the integers, templated on the mass type so the
/// same code serves floating and exact rational arithmetic.
template <class Scalar>
class DiscreteLaw {
 public:
  DiscreteLaw() = default;
  explicit DiscreteLaw(std::map<std::int64_t, Scalar> masses) : masses_(std::move(masses)) {}

  static DiscreteLaw point(std::int64_t k) { return DiscreteLaw({{k, Scalar(1)}}); }
  static DiscreteLaw bernoulli(const Scalar& p) { return DiscreteLaw({{0, Scalar(1) - p}, {1, p}}); }

  Scalar operator()(std::int64_t k) const {
    const auto it = masses_.find(k);
    return it == masses_.end() ? Scalar(0) : it->second;
  }

  Scalar total() const {
    Scalar t(0);
    for (const auto& [k, m] : masses_) t += m;
    return t;
  }

  const std::map<std::int64_t, Scalar>& masses() const { return masses_; }

 private:
  std::map<std::int64_t, Scalar> masses_;
};

/// (a * b)(k) = sum_j a(j) b(k - j).
template <class Scalar>
DiscreteLaw<Scalar> rho_convolve(const DiscreteLaw<Scalar>& a, const DiscreteLaw<Scalar>& b) {
  std::map<std::int64_t, Scalar> out;
  for (const auto& [j, ma] : a.masses())
    for (const auto& [i, mb] : b.masses()) out[j + i] += ma * mb;
  return DiscreteLaw<Scalar>(std::move(out));
}

/// Law of an integer-valued bounded sequence: k -> |{n <= n_trunc : x_n = k}| / n_trunc.
DiscreteLaw<double> rho(const RealSeq& x, std::uint64_t n_trunc);

/// Tabulated distribution function, linearly interpolated between grid points
/// and clamped to 0 / 1 outside its support.
EvaluableCDF tabulated_cdf(std::vector<double> grid, std::vector<double> values, Interval support);

/// z -> ∫ F(z - eta) dG(eta), with G discretised into `cells` equal-width mass
/// cells tagged at their midpoints; the result is tabulated on `grid`.
EvaluableCDF cdf_convolve(const EvaluableCDF& F, const EvaluableCDF& G, std::span<const double> grid,
                          std::size_t cells = 4096);

/// Distribution function of cos(2 pi alpha n) for irrational alpha: 1/2 + arcsin(z)/pi on [-1, 1].
double arcsine_cdf(double z);
EvaluableCDF arcsine();

enum class SumMode { DiscreteN, ContinuousT };

/// Empirical distribution of sum_j cos(2 pi alpha_j n) / sqrt(m/2) over n <= n_trunc
/// (or over t = i * step, i <= n_trunc, in continuous mode).
RelCDF cosine_sum_cdf(std::span<const Frequency> alphas, std::uint64_t n_trunc, std::span<const double> grid,
                      SumMode mode = SumMode::DiscreteN, double step = 1.0 / 64.0);

/// m-fold Stieltjes convolution of the arcsine law, rescaled by sqrt(m/2).
/// Each intermediate law is tabulated on cells + 1 points spanning its support.
EvaluableCDF normalized_arcsine_power(std::size_t m, std::size_t cells = 4096);

/// max over the grid of |F - G|.
double ks_on_grid(const RelCDF& F, const EvaluableCDF& G);

}  // namespace reldens
