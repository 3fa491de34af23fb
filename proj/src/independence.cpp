#include "reldens/independence.hpp"

#include "reldens/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reldens {

namespace {

using Histogram = std::vector<std::uint64_t>;

void merge_histograms(Histogram& a, const Histogram& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// Membership-signature histogram over n in [first, last).
Histogram signature_counts(std::span<const IntegerSetSpec> specs, std::uint64_t first, std::uint64_t last) {
  const std::size_t m = specs.size();
  return reduce_chunks(
      first, last, kScanChunk, Histogram(std::size_t{1} << m, 0),
      [&](std::uint64_t lo, std::uint64_t hi, Histogram& acc) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          std::size_t sig = 0;
          for (std::size_t i = 0; i < m; ++i) sig |= static_cast<std::size_t>(specs[i].contains(n)) << i;
          ++acc[sig];
        }
      },
      merge_histograms);
}

// counts[S] <- number of n whose signature contains S, i.e. |∩_{i in S} A_i|.
void superset_sums(Histogram& counts, std::size_t m) {
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < counts.size(); ++s)
      if (!(s & bit)) counts[s] += counts[s | bit];
  }
}

std::vector<std::size_t> members(std::size_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

struct ExactSearch {
  const Histogram& joint;
  std::vector<BigInt> marginal;
  std::vector<BigInt> period_pow;  // L^d
  BigInt best_num = -1;
  std::size_t best_depth = 1;
  std::size_t best_mask = 0;

  // Subset `mask` has `depth` members and marginal product `prod`;
  // its defect is |c_I L^(d-1) - prod| / L^d.
  void visit(std::size_t start, std::size_t mask, std::size_t depth, const BigInt& prod) {
    for (std::size_t i = start; i < marginal.size(); ++i) {
      const std::size_t next = mask | (std::size_t{1} << i);
      const BigInt next_prod = prod * marginal[i];
      const std::size_t d = depth + 1;
      if (d >= 2) {
        BigInt num = BigInt(joint[next]) * period_pow[d - 1] - next_prod;
        if (num < 0) num = -num;
        if (best_num < 0 || num * period_pow[best_depth] > best_num * period_pow[d]) {
          best_num = num;
          best_depth = d;
          best_mask = next;
        }
      }
      visit(i + 1, next, d, next_prod);
    }
  }
};

struct FloatSearch {
  const Histogram& joint;
  std::vector<double> marginal;
  double total;
  double best = -1.0;
  std::size_t best_mask = 0;

  void visit(std::size_t start, std::size_t mask, std::size_t depth, double prod) {
    for (std::size_t i = start; i < marginal.size(); ++i) {
      const std::size_t next = mask | (std::size_t{1} << i);
      const double next_prod = prod * marginal[i];
      if (depth + 1 >= 2) {
        const double defect = std::abs(static_cast<double>(joint[next]) / total - next_prod);
        if (defect > best) {
          best = defect;
          best_mask = next;
        }
      }
      visit(i + 1, next, depth + 1, next_prod);
    }
  }
};

}  // namespace

IndependenceReport set_family_defect(std::span<const IntegerSetSpec> specs, std::uint64_t n_max, DefectMode mode) {
  const std::size_t m = specs.size();
  if (m < 2) throw std::invalid_argument("family needs at least two sets");
  if (m > kMaxFamilySize) throw std::invalid_argument("combinatorial blowup");
  IndependenceReport report;
  report.family_size = m;
  report.subsets_checked = (std::uint64_t{1} << m) - (m + 1);
  report.exact = mode == DefectMode::Exact;

  if (mode == DefectMode::Exact) {
    for (const auto& s : specs)
      if (!s.is_symbolic()) throw std::invalid_argument("exact mode requires symbolic sets");
    const auto form = periodic_form(IntegerSetSpec::intersection({specs.begin(), specs.end()}));
    auto joint = signature_counts(specs, form->offset + 1, form->offset + form->period + 1);
    superset_sums(joint, m);
    ExactSearch search{joint, {}, {}};
    for (std::size_t i = 0; i < m; ++i) search.marginal.emplace_back(joint[std::size_t{1} << i]);
    search.period_pow.emplace_back(1);
    for (std::size_t d = 1; d <= m; ++d) search.period_pow.push_back(search.period_pow.back() * form->period);
    search.visit(0, 0, 0, BigInt(1));
    const Rational defect(search.best_num, search.period_pow[search.best_depth]);
    report.max_defect_exact = defect;
    report.max_defect = to_double(defect);
    report.worst_subset = members(search.best_mask);
    return report;
  }

  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  auto joint = signature_counts(specs, 1, n_max + 1);
  superset_sums(joint, m);
  const double total = static_cast<double>(n_max);
  FloatSearch search{joint, {}, total};
  for (std::size_t i = 0; i < m; ++i) search.marginal.push_back(static_cast<double>(joint[std::size_t{1} << i]) / total);
  search.visit(0, 0, 0, 1.0);
  report.max_defect = search.best;
  report.worst_subset = members(search.best_mask);
  return report;
}

IndependenceReport sequence_independence_defect(std::span<const RealSeq> seqs,
                                                std::span<const std::vector<Interval>> interval_grids,
                                                std::uint64_t n_max, std::size_t tuple_cap) {
  const std::size_t m = seqs.size();
  if (m < 2) throw std::invalid_argument("need at least two sequences");
  if (interval_grids.size() != m) throw std::invalid_argument("one interval grid per sequence required");
  for (const auto& g : interval_grids)
    if (g.empty()) throw std::invalid_argument("empty interval grid");
  if (n_max < 10000) throw std::invalid_argument("n_max must be >= 10^4");
  if (m > kMaxFamilySize) throw std::invalid_argument("combinatorial blowup");
  tuple_cap = std::clamp<std::size_t>(tuple_cap, 2, m);

  // Tuples of sequence indices, and the offset of each tuple's joint table.
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    auto t = members(mask);
    if (t.size() >= 2 && t.size() <= tuple_cap) tuples.push_back(std::move(t));
  }
  std::vector<std::size_t> marginal_offset(m + 1, 0);
  for (std::size_t s = 0; s < m; ++s) marginal_offset[s + 1] = marginal_offset[s] + interval_grids[s].size();
  std::vector<std::size_t> joint_offset{marginal_offset[m]};
  for (const auto& t : tuples) {
    std::size_t cells = 1;
    for (auto s : t) cells *= interval_grids[s].size();
    if (cells > (std::size_t{1} << 24)) throw std::invalid_argument("combinatorial blowup");
    joint_offset.push_back(joint_offset.back() + cells);
  }

  const auto counts = reduce_chunks(
      1, n_max + 1, kScanChunk, Histogram(joint_offset.back(), 0),
      [&](std::uint64_t lo, std::uint64_t hi, Histogram& acc) {
        std::vector<std::vector<std::size_t>> hits(m);
        for (std::uint64_t n = lo; n < hi; ++n) {
          for (std::size_t s = 0; s < m; ++s) {
            hits[s].clear();
            const double x = seqs[s](n);
            for (std::size_t k = 0; k < interval_grids[s].size(); ++k)
              if (interval_grids[s][k].contains(x)) {
                hits[s].push_back(k);
                ++acc[marginal_offset[s] + k];
              }
          }
          for (std::size_t t = 0; t < tuples.size(); ++t) {
            // Odometer over the cartesian product of the hit lists.
            const auto& tuple = tuples[t];
            std::vector<std::size_t> pos(tuple.size(), 0);
            bool empty = false;
            for (auto s : tuple) empty = empty || hits[s].empty();
            while (!empty) {
              std::size_t flat = 0;
              for (std::size_t q = 0; q < tuple.size(); ++q)
                flat = flat * interval_grids[tuple[q]].size() + hits[tuple[q]][pos[q]];
              ++acc[joint_offset[t] + flat];
              std::size_t q = tuple.size();
              while (q > 0) {
                --q;
                if (++pos[q] < hits[tuple[q]].size()) break;
                pos[q] = 0;
                if (q == 0) empty = true;
              }
            }
          }
        }
      },
      merge_histograms);

  IndependenceReport report;
  report.family_size = m;
  const double total = static_cast<double>(n_max);
  double best = -1.0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& tuple = tuples[t];
    const std::size_t cells = joint_offset[t + 1] - joint_offset[t];
    for (std::size_t flat = 0; flat < cells; ++flat) {
      std::vector<std::size_t> choice(tuple.size());
      std::size_t rest = flat;
      double prod = 1.0;
      for (std::size_t q = tuple.size(); q-- > 0;) {
        const auto size = interval_grids[tuple[q]].size();
        choice[q] = rest % size;
        rest /= size;
        prod *= static_cast<double>(counts[marginal_offset[tuple[q]] + choice[q]]) / total;
      }
      const double defect = std::abs(static_cast<double>(counts[joint_offset[t] + flat]) / total - prod);
      ++report.subsets_checked;
      if (defect > best) {
        best = defect;
        report.worst_subset = tuple;
        report.worst_intervals = choice;
      }
    }
  }
  report.max_defect = best;
  return report;
}

}  // namespace reldens
