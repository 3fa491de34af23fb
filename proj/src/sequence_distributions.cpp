#include "reldens/sequence_distributions.hpp"

#include "reldens/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace reldens {

namespace {

struct GridCounts {
  std::vector<std::uint64_t> counts;  // counts[i]: values in (grid[i-1], grid[i]]; last slot: above the grid
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
};

template <class Value>
RelCDF count_into_grid(std::uint64_t n_trunc, std::span<const double> grid, Value value) {
  if (n_trunc == 0) throw std::invalid_argument("n_trunc must be >= 1");
  if (grid.empty()) throw std::invalid_argument("empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("grid must be sorted");
  GridCounts init;
  init.counts.assign(grid.size() + 1, 0);
  const auto total = reduce_chunks(
      1, n_trunc + 1, kScanChunk, init,
      [&](std::uint64_t lo, std::uint64_t hi, GridCounts& acc) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          const double x = value(n);
          const auto slot = std::lower_bound(grid.begin(), grid.end(), x) - grid.begin();
          ++acc.counts[static_cast<std::size_t>(slot)];
          acc.min = std::min(acc.min, x);
          acc.max = std::max(acc.max, x);
        }
      },
      [](GridCounts& a, const GridCounts& b) {
        for (std::size_t i = 0; i < a.counts.size(); ++i) a.counts[i] += b.counts[i];
        a.min = std::min(a.min, b.min);
        a.max = std::max(a.max, b.max);
      });
  RelCDF F;
  F.grid.assign(grid.begin(), grid.end());
  F.n_trunc = n_trunc;
  F.observed_min = total.min;
  F.observed_max = total.max;
  F.values.resize(grid.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    running += total.counts[i];
    F.values[i] = static_cast<double>(running) / static_cast<double>(n_trunc);
  }
  return F;
}

// Locates z in a sorted grid, using arithmetic indexing when the grid is uniform.
class GridLocator {
 public:
  explicit GridLocator(const std::vector<double>& grid) : grid_(grid) {
    if (grid.size() >= 2) {
      step_ = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
      uniform_ = step_ > 0.0;
      for (std::size_t i = 0; uniform_ && i < grid.size(); ++i)
        uniform_ = std::abs(grid[i] - (grid.front() + step_ * static_cast<double>(i))) <= 1e-9 * step_;
    }
  }

  /// Index i with grid[i] <= z < grid[i+1], for z inside the grid.
  std::size_t cell(double z) const {
    if (uniform_) {
      auto i = static_cast<std::size_t>((z - grid_.front()) / step_);
      return std::min(i, grid_.size() - 2);
    }
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), z);
    return static_cast<std::size_t>(it - grid_.begin()) - 1;
  }

 private:
  const std::vector<double>& grid_;
  double step_ = 0.0;
  bool uniform_ = false;
};

struct Tabulated {
  std::vector<double> grid;
  std::vector<double> values;
  Interval support;
  GridLocator locator;

  Tabulated(std::vector<double> g, std::vector<double> v, Interval s)
      : grid(std::move(g)), values(std::move(v)), support(s), locator(grid) {}

  double operator()(double z) const {
    if (z < support.lo) return 0.0;
    if (z >= support.hi) return 1.0;
    if (z <= grid.front()) return values.front();
    if (z >= grid.back()) return values.back();
    const std::size_t i = locator.cell(z);
    const double t = (z - grid[i]) / (grid[i + 1] - grid[i]);
    return values[i] + t * (values[i + 1] - values[i]);
  }
};

}  // namespace

EvaluableCDF RelCDF::as_evaluable() const {
  auto g = std::make_shared<const std::vector<double>>(grid);
  auto v = std::make_shared<const std::vector<double>>(values);
  return EvaluableCDF{[g, v](double z) {
                        const auto it = std::upper_bound(g->begin(), g->end(), z);
                        if (it == g->begin()) return 0.0;
                        return (*v)[static_cast<std::size_t>(it - g->begin()) - 1];
                      },
                      std::nullopt};
}

RelCDF relative_cdf(const RealSeq& x, std::uint64_t n_trunc, std::span<const double> grid) {
  return count_into_grid(n_trunc, grid, [&](std::uint64_t n) { return x(n); });
}

AverageTrace relative_average(const RealSeq& x, std::uint64_t n_trunc, std::size_t checkpoint_count) {
  if (n_trunc == 0) throw std::invalid_argument("n_trunc must be >= 1");
  const auto probes = geometric_checkpoints(n_trunc, checkpoint_count);
  const auto scan = prefix_scan<NeumaierSum>(n_trunc, probes, [&](NeumaierSum& s, std::uint64_t n) { s.add(x(n)); });
  AverageTrace trace;
  trace.value = scan.total.value() / static_cast<double>(n_trunc);
  for (std::size_t i = 0; i < probes.size(); ++i)
    trace.checkpoints.emplace_back(probes[i], scan.at_probes[i].value() / static_cast<double>(probes[i]));
  return trace;
}

double stieltjes_mean(const RelCDF& F) {
  if (F.grid.empty()) throw std::invalid_argument("empty grid");
  if (F.observed_min < F.grid.front() || F.observed_max > F.grid.back()) throw std::invalid_argument("support not covered");
  NeumaierSum s;
  s.add(F.grid.front() * F.values.front());
  for (std::size_t i = 1; i < F.grid.size(); ++i) s.add(F.grid[i] * (F.values[i] - F.values[i - 1]));
  return s.value();
}

DiscreteLaw<double> rho(const RealSeq& x, std::uint64_t n_trunc) {
  if (n_trunc == 0) throw std::invalid_argument("n_trunc must be >= 1");
  using Counts = std::map<std::int64_t, std::uint64_t>;
  const auto counts = reduce_chunks(
      1, n_trunc + 1, kScanChunk, Counts{},
      [&](std::uint64_t lo, std::uint64_t hi, Counts& acc) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          const double v = x(n);
          if (!(std::abs(v) <= 1e6)) throw std::invalid_argument("sequence value out of range");
          if (v != std::round(v)) throw std::invalid_argument("non-integer value encountered");
          ++acc[static_cast<std::int64_t>(v)];
        }
      },
      [](Counts& a, const Counts& b) {
        for (const auto& [k, c] : b) a[k] += c;
      });
  std::map<std::int64_t, double> masses;
  for (const auto& [k, c] : counts) masses[k] = static_cast<double>(c) / static_cast<double>(n_trunc);
  return DiscreteLaw<double>(std::move(masses));
}

EvaluableCDF tabulated_cdf(std::vector<double> grid, std::vector<double> values, Interval support) {
  if (grid.size() < 2 || grid.size() != values.size()) throw std::invalid_argument("tabulated cdf needs >= 2 points");
  auto table = std::make_shared<const Tabulated>(std::move(grid), std::move(values), support);
  return EvaluableCDF{[table](double z) { return (*table)(z); }, support};
}

EvaluableCDF cdf_convolve(const EvaluableCDF& F, const EvaluableCDF& G, std::span<const double> grid,
                          std::size_t cells) {
  if (!F.support || !G.support) throw std::invalid_argument("unbounded support");
  if (grid.size() < 2 || !std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("grid must be sorted");
  if (cells == 0) throw std::invalid_argument("cells must be positive");
  const double a = G.support->lo;
  const double width = (G.support->hi - a) / static_cast<double>(cells);
  std::vector<double> tags{a};
  std::vector<double> mass{G(a)};
  double prev = mass.front();
  for (std::size_t i = 1; i <= cells; ++i) {
    const double edge = i == cells ? G.support->hi : a + width * static_cast<double>(i);
    const double cur = G(edge);
    tags.push_back(edge - 0.5 * width);
    mass.push_back(cur - prev);
    prev = cur;
  }
  auto values = map_chunks(0, grid.size(), 256, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> out;
    for (std::uint64_t j = lo; j < hi; ++j) {
      NeumaierSum s;
      for (std::size_t i = 0; i < tags.size(); ++i)
        if (mass[i] != 0.0) s.add(mass[i] * F(grid[j] - tags[i]));
      out.push_back(std::clamp(s.value(), 0.0, 1.0));
    }
    return out;
  });
  std::vector<double> flat;
  flat.reserve(grid.size());
  for (auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
  for (std::size_t i = 1; i < flat.size(); ++i) flat[i] = std::max(flat[i], flat[i - 1]);
  const Interval support{F.support->lo + G.support->lo, F.support->hi + G.support->hi};
  return tabulated_cdf(std::vector<double>(grid.begin(), grid.end()), std::move(flat), support);
}

double arcsine_cdf(double z) {
  if (z < -1.0) return 0.0;
  if (z > 1.0) return 1.0;
  return 0.5 + std::asin(z) / kPi;
}

EvaluableCDF arcsine() { return EvaluableCDF{[](double z) { return arcsine_cdf(z); }, Interval{-1.0, 1.0}}; }

RelCDF cosine_sum_cdf(std::span<const Frequency> alphas, std::uint64_t n_trunc, std::span<const double> grid,
                      SumMode mode, double step) {
  if (alphas.empty()) throw std::invalid_argument("at least one frequency required");
  if (mode == SumMode::ContinuousT && !(step > 0.0)) throw std::invalid_argument("step must be positive");
  std::vector<Frequency> freqs;
  for (const auto& a : alphas) freqs.push_back(mode == SumMode::ContinuousT ? a.scaled(step) : a);
  const double scale = 1.0 / std::sqrt(static_cast<double>(freqs.size()) / 2.0);
  return count_into_grid(n_trunc, grid, [&](std::uint64_t n) {
    double s = 0.0;
    for (const auto& f : freqs) s += std::cos(kTwoPi * f.phase(n));
    return s * scale;
  });
}

EvaluableCDF normalized_arcsine_power(std::size_t m, std::size_t cells) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  EvaluableCDF law = arcsine();
  for (std::size_t k = 2; k <= m; ++k) {
    const double r = static_cast<double>(k);
    law = cdf_convolve(law, arcsine(), linspace(-r, r, cells + 1), cells);
  }
  const double scale = std::sqrt(static_cast<double>(m) / 2.0);
  const double edge = static_cast<double>(m) / scale;
  return EvaluableCDF{[law, scale](double z) { return law(z * scale); }, Interval{-edge, edge}};
}

double ks_on_grid(const RelCDF& F, const EvaluableCDF& G) {
  if (F.grid.empty()) throw std::invalid_argument("empty grid");
  double worst = 0.0;
  for (std::size_t i = 0; i < F.grid.size(); ++i) worst = std::max(worst, std::abs(F.values[i] - G(F.grid[i])));
  return worst;
}

}  // namespace reldens
