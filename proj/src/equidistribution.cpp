#include "reldens/equidistribution.hpp"

#include "reldens/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reldens {

namespace {

struct ComplexSum {
  NeumaierSum re, im;
  void merge(const ComplexSum& o) {
    re.merge(o.re);
    im.merge(o.im);
  }
};

void check_family(std::span<const RealSeq> seqs) {
  if (seqs.empty()) throw std::invalid_argument("at least one sequence required");
}

}  // namespace

WeylSumResult weyl_sum(std::span<const RealSeq> seqs, std::span<const std::int64_t> h, std::uint64_t n_trunc,
                       std::size_t checkpoint_count) {
  check_family(seqs);
  if (h.size() != seqs.size()) throw std::invalid_argument("one coefficient per sequence required");
  if (std::all_of(h.begin(), h.end(), [](std::int64_t c) { return c == 0; }))
    throw std::invalid_argument("trivial character");
  if (n_trunc == 0) throw std::invalid_argument("n_trunc must be >= 1");

  const auto probes = geometric_checkpoints(n_trunc, checkpoint_count);
  const auto scan = prefix_scan<ComplexSum>(n_trunc, probes, [&](ComplexSum& acc, std::uint64_t n) {
    double phase = 0.0;
    for (std::size_t j = 0; j < seqs.size(); ++j) phase = frac(phase + frac(static_cast<double>(h[j]) * frac(seqs[j](n))));
    const double angle = kTwoPi * phase;
    acc.re.add(std::cos(angle));
    acc.im.add(std::sin(angle));
  });

  auto magnitude = [](const ComplexSum& s, std::uint64_t n) {
    return std::min(1.0, std::hypot(s.re.value(), s.im.value()) / static_cast<double>(n));
  };
  WeylSumResult out;
  out.h.assign(h.begin(), h.end());
  out.n_trunc = n_trunc;
  out.mean = {scan.total.re.value() / static_cast<double>(n_trunc), scan.total.im.value() / static_cast<double>(n_trunc)};
  out.magnitude = magnitude(scan.total, n_trunc);
  for (std::size_t i = 0; i < probes.size(); ++i) out.trace.emplace_back(probes[i], magnitude(scan.at_probes[i], probes[i]));
  return out;
}

double star_discrepancy_1d(std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (double x : points)
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("point outside [0,1)");
  std::sort(points.begin(), points.end());
  const double n = static_cast<double>(points.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double k = static_cast<double>(i);
    worst = std::max({worst, (k + 1.0) / n - points[i], points[i] - k / n});
  }
  return worst;
}

QmcResult qmc_integrate(const std::function<double(std::span<const double>)>& psi, std::span<const RealSeq> seqs,
                        std::uint64_t n_trunc, std::size_t checkpoint_count) {
  check_family(seqs);
  if (n_trunc == 0) throw std::invalid_argument("n_trunc must be >= 1");
  const auto probes = geometric_checkpoints(n_trunc, checkpoint_count);
  const auto scan = prefix_scan<NeumaierSum>(n_trunc, probes, [&](NeumaierSum& acc, std::uint64_t n) {
    double u[32];
    std::vector<double> spill;
    double* point = u;
    if (seqs.size() > 32) {
      spill.resize(seqs.size());
      point = spill.data();
    }
    for (std::size_t j = 0; j < seqs.size(); ++j) point[j] = frac(seqs[j](n));
    acc.add(psi(std::span<const double>(point, seqs.size())));
  });
  QmcResult out;
  out.estimate = scan.total.value() / static_cast<double>(n_trunc);
  for (std::size_t i = 0; i < probes.size(); ++i)
    out.trace.emplace_back(probes[i], scan.at_probes[i].value() / static_cast<double>(probes[i]));
  return out;
}

void MonotonePieceMap::validate() const {
  if (!fn) throw std::invalid_argument("map has no function");
  if (breakpoints.size() < 2 || directions.size() + 1 != breakpoints.size())
    throw std::invalid_argument("piece description needs k+1 breakpoints for k directions");
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0) throw std::invalid_argument("pieces must cover [0,1)");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) throw std::invalid_argument("breakpoints must increase");
    if (directions[i] != 1 && directions[i] != -1) throw std::invalid_argument("direction must be +1 or -1");
    constexpr int kProbes = 257;
    const double a = breakpoints[i], b = breakpoints[i + 1];
    double prev = fn(a);
    for (int s = 1; s < kProbes; ++s) {
      // Stay inside the half-open piece.
      const double t = a + (b - a) * s / kProbes;
      const double v = fn(t);
      const double step = (v - prev) * directions[i];
      if (step < -1e-12 * std::max(1.0, std::abs(prev))) throw std::invalid_argument("non-monotone piece in " + label);
      prev = v;
    }
  }
}

MonotonePieceMap MonotonePieceMap::identity() { return {{0.0, 1.0}, {1}, [](double u) { return u; }, "identity"}; }

MonotonePieceMap MonotonePieceMap::cosine() {
  return {{0.0, 0.5, 1.0}, {-1, 1}, [](double u) { return std::cos(kTwoPi * u); }, "cos"};
}

MonotonePieceMap MonotonePieceMap::threshold(double cut) {
  if (!(cut > 0.0 && cut < 1.0)) throw std::invalid_argument("threshold must lie in (0,1)");
  return {{0.0, cut, 1.0}, {1, 1}, [cut](double u) { return u < cut ? 0.0 : 1.0; }, "threshold"};
}

std::vector<MappedSeq> map_independent(std::span<const RealSeq> seqs, std::span<const MonotonePieceMap> maps) {
  if (seqs.size() != maps.size()) throw std::invalid_argument("one map per sequence required");
  std::vector<MappedSeq> out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    maps[i].validate();
    RealSeq mapped{[g = maps[i].fn, x = seqs[i].generator](std::uint64_t n) { return g(frac(x(n))); }, std::nullopt,
                   maps[i].label + "(" + seqs[i].label + ")"};
    out.push_back({std::move(mapped), maps[i].directions.size()});
  }
  return out;
}

}  // namespace reldens
