#pragma once

// Weyl sums, one-dimensional star discrepancy, equidistribution-based
// integration, and composition with piecewise monotone maps.

#include "reldens/sequence.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reldens {

struct WeylSumResult {
  std::vector<std::int64_t> h;
  std::uint64_t n_trunc = 0;
  double magnitude = 0.0;
  std::complex<double> mean;
  std::vector<std::pair<std::uint64_t, double>> trace;
};

/// |(1/N) sum_n exp(2 pi i <h, x_n>)| with each x_n reduced mod 1 first.
WeylSumResult weyl_sum(std::span<const RealSeq> seqs, std::span<const std::int64_t> h, std::uint64_t n_trunc,
                       std::size_t checkpoint_count = 16);

/// Exact D*_N of a point set in [0,1).
double star_discrepancy_1d(std::vector<double> points);

struct QmcResult {
  double estimate = 0.0;
  std::vector<std::pair<std::uint64_t, double>> trace;
};

/// (1/N) sum_n psi(frac(x^1_n), ..., frac(x^m_n)).
QmcResult qmc_integrate(const std::function<double(std::span<const double>)>& psi, std::span<const RealSeq> seqs,
                        std::uint64_t n_trunc, std::size_t checkpoint_count = 16);

/// A map on [0,1) that is monotone on each of finitely many pieces
/// [breakpoints[i], breakpoints[i+1]). directions[i] is +1 or -1.
struct MonotonePieceMap {
  std::vector<double> breakpoints;
  std::vector<int> directions;
  std::function<double(double)> fn;
  std::string label;

  /// Checks the piece layout and samples every piece for monotonicity.
  void validate() const;

  static MonotonePieceMap identity();
  static MonotonePieceMap cosine();
  static MonotonePieceMap threshold(double cut = 0.5);
};

struct MappedSeq {
  RealSeq seq;
  std::size_t pieces = 0;
};

/// g_i(frac(x^i_n)) for each i. Throws on a non-monotone piece description.
std::vector<MappedSeq> map_independent(std::span<const RealSeq> seqs, std::span<const MonotonePieceMap> maps);

}  // namespace reldens
