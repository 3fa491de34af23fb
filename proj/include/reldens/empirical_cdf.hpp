#pragma once

#include "reldens/gaussian_stats.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace reldens {

/// Right-continuous step distribution function of a finite weighted sample,
/// stored as distinct values with cumulative counts.
class EmpiricalCDF {
 public:
  EmpiricalCDF() = default;

  /// Takes ownership of raw samples; sorts and compacts them in place.
  static EmpiricalCDF from_samples(std::vector<double> samples);

  /// (value, count) pairs in any order; zero counts are dropped.
  static EmpiricalCDF from_weighted(std::vector<std::pair<double, std::uint64_t>> pairs);

  std::uint64_t n_total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }
  std::size_t distinct() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  std::uint64_t count_at(std::size_t i) const { return cumulative_[i] - (i == 0 ? 0 : cumulative_[i - 1]); }

  /// Number of samples <= z.
  std::uint64_t count_le(double z) const;
  double eval(double z) const;
  double operator()(double z) const { return eval(z); }

  /// Exact sup |F - G| for continuous G, checking both one-sided limits at every jump.
  double ks_to(const EvaluableCDF& G) const;

  double mean() const;
  double variance() const;

  EvaluableCDF as_evaluable() const;

 private:
  std::vector<double> values_;
  std::vector<std::uint64_t> cumulative_;
};

}  // namespace reldens
