#pragma once

// Product-rule defects measuring how far a family of integer sets, or a family
// of sequences over interval preimages, is from being independent under the
// relative measure.

#include "reldens/natural_density.hpp"
#include "reldens/sequence.hpp"

#include <optional>
#include <span>
#include <vector>

namespace reldens {

struct IndependenceReport {
  std::size_t family_size = 0;
  std::uint64_t subsets_checked = 0;
  double max_defect = 0.0;
  /// Indices of the members (sets or sequences) attaining max_defect.
  std::vector<std::size_t> worst_subset;
  /// For sequence families: interval index chosen for each sequence in worst_subset.
  std::vector<std::size_t> worst_intervals;
  bool exact = false;
  std::optional<Rational> max_defect_exact;
};

enum class DefectMode { Exact, Empirical };

inline constexpr std::size_t kMaxFamilySize = 20;

/// Max over subsets I with |I| >= 2 of |mu(∩ A_i) - prod mu(A_i)|. Exact mode uses
/// the joint period of the family; empirical mode truncates at n_max.
IndependenceReport set_family_defect(std::span<const IntegerSetSpec> specs, std::uint64_t n_max, DefectMode mode);

/// Compares truncated joint densities of {x_n ∈ I_1, y_n ∈ I_2, ...} with the
/// product of marginals, over every tuple of at most `tuple_cap` sequences and
/// every choice of one interval per sequence.
IndependenceReport sequence_independence_defect(std::span<const RealSeq> seqs,
                                                std::span<const std::vector<Interval>> interval_grids,
                                                std::uint64_t n_max, std::size_t tuple_cap = 2);

}  // namespace reldens
