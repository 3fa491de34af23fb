#pragma once

// Lacunary and Rademacher series: Hadamard gap checks, Salem–Zygmund and Kac
// central limit experiments, Kac's variance series, Lindeberg evaluators and
// numerical convergence probes.

#include "reldens/empirical_cdf.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reldens {

/// Strictly increasing positive integers n_k, k >= 1. Frequencies such as 2^256
/// do not fit in a machine word, so the sequence is given by its magnitude (for
/// gap ratios) and its residue modulo an arbitrary modulus (for exact phases).
struct GapSequence {
  std::function<double(std::uint64_t)> magnitude;
  std::function<std::uint64_t(std::uint64_t k, std::uint64_t mod)> residue;
  std::string label;

  static GapSequence geometric(std::uint64_t base);
  /// base^k + k
  static GapSequence power_plus_index(std::uint64_t base);
  /// n_k = k
  static GapSequence linear();
};

struct WeightSequence {
  std::function<double(std::uint64_t)> generator;
  std::string label;

  double operator()(std::uint64_t k) const { return generator(k); }
};

struct HadamardReport {
  double min_ratio = 0.0;
  bool holds = false;
};

/// min over k <= k_max of n_{k+1}/n_k; holds when it exceeds 1 + margin.
HadamardReport hadamard_check(const GapSequence& seq, std::uint64_t k_max, double margin = 1e-9);

/// sign sin(2^k pi t) from the dyadic position of t; 0 at t = j/2^k.
int rademacher(unsigned k, double t);

struct RademacherProbe {
  std::uint64_t k_max = 0;
  /// Partial sums S_K at K = k_max/4, k_max/2, k_max for each sample.
  std::vector<std::array<double, 3>> partial_sums;
  /// sum of a_k^2 over (k_max/2, k_max].
  double tail_sum = 0.0;
  /// Fraction of samples with |S_kmax - S_kmax/2| < 10 sqrt(tail_sum).
  double cauchy_fraction = 0.0;
  /// Tail energy over (k_max/2, k_max] divided by that over (k_max/4, k_max/2].
  double tail_ratio = 0.0;
  bool divergence_flagged = false;
};

/// Partial sums of sum a_k r_k(t). Binary digits of t past double precision are
/// continued with a deterministic pseudo-random stream, so every sample behaves
/// like a generic point rather than a dyadic rational.
RademacherProbe rademacher_series_probe(const WeightSequence& a, std::span<const double> t_samples,
                                        std::uint64_t k_max);

struct LindebergResult {
  double L = 0.0;
  double s = 0.0;
};

/// L_n(eps) for centered Bernoulli(p_k) summands, computed exactly.
LindebergResult lindeberg_bernoulli(std::span<const double> p, double eps);

/// max_{k<=n} |a_k| / sqrt(sum_{k<=n} a_k^2).
double weight_condition_check(const WeightSequence& a, std::uint64_t n);

/// Modulus of the evaluation grid x_i = j_i / P. 2 has order (P-1)/2 mod P, so
/// doubling orbits of grid points do not collapse.
inline constexpr std::uint64_t kGridModulus = 1'000'000'007ULL;

/// Grid numerator j_i = round((i - 1/2) P / G), i = 1..G.
std::uint64_t grid_numerator(std::uint64_t i, std::uint64_t grid_size);

/// Law of sum_{k<=m} cos(2 pi n_k x) / sqrt(m/2) over the x grid.
EmpiricalCDF salem_zygmund_cdf(const GapSequence& seq, std::uint64_t m_terms, std::uint64_t grid_size,
                               double min_gap = 1.05);

/// A 1-periodic function, tabulated at t_i = i/4096 and optionally given in closed form.
struct PeriodicFunction {
  static constexpr std::size_t kSamples = 4096;
  std::vector<double> samples;
  std::function<double(double)> closed_form;
  std::string label;

  static PeriodicFunction from_callable(std::function<double(double)> f, std::string label, bool keep_closed_form = true);

  /// f(u) for u in [0,1).
  double operator()(double u) const;
};

struct KacSigma2 {
  double sigma2 = 0.0;
  /// Magnitude of the last series term kept, as a truncation gauge.
  double last_term = 0.0;
};

/// int f^2 + 2 sum_{k<=k_max} int f(t) f(2^k t) dt on the sample grid.
KacSigma2 kac_sigma2(const PeriodicFunction& f, unsigned k_max = 10);

/// Law of sum_{k<=N} f(2^k x) / (sigma sqrt N) over the x grid.
EmpiricalCDF kac_clt_cdf(const PeriodicFunction& f, std::uint64_t n_terms, std::uint64_t grid_size);

}  // namespace reldens
