#include "reldens/lacunary.hpp"

#include "reldens/core.hpp"
#include "reldens/parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace reldens {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  for (; e; e >>= 1) {
    if (e & 1u) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Evaluates stat(i) for grid points i = 1..G in chunk order.
template <class Stat>
EmpiricalCDF grid_law(std::uint64_t grid_size, Stat stat) {
  require_memory(grid_size * 2 * sizeof(double), "grid samples");
  auto chunks = map_chunks(1, grid_size + 1, 4096, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> v;
    v.reserve(hi - lo);
    for (std::uint64_t i = lo; i < hi; ++i) v.push_back(stat(i));
    return v;
  });
  std::vector<double> samples;
  samples.reserve(grid_size);
  for (const auto& c : chunks) samples.insert(samples.end(), c.begin(), c.end());
  return EmpiricalCDF::from_samples(std::move(samples));
}

}  // namespace

GapSequence GapSequence::geometric(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  return {[base](std::uint64_t k) { return std::pow(static_cast<double>(base), static_cast<double>(k)); },
          [base](std::uint64_t k, std::uint64_t mod) { return powmod(base, k, mod); },
          std::to_string(base) + "^k"};
}

GapSequence GapSequence::power_plus_index(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  return {[base](std::uint64_t k) { return std::pow(static_cast<double>(base), static_cast<double>(k)) + static_cast<double>(k); },
          [base](std::uint64_t k, std::uint64_t mod) { return (powmod(base, k, mod) + k % mod) % mod; },
          std::to_string(base) + "^k+k"};
}

GapSequence GapSequence::linear() {
  return {[](std::uint64_t k) { return static_cast<double>(k); },
          [](std::uint64_t k, std::uint64_t mod) { return k % mod; }, "k"};
}

HadamardReport hadamard_check(const GapSequence& seq, std::uint64_t k_max, double margin) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  HadamardReport r;
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const double a = seq.magnitude(k), b = seq.magnitude(k + 1);
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("gap sequence must be positive and increasing");
    r.min_ratio = std::min(r.min_ratio, b / a);
  }
  r.holds = r.min_ratio > 1.0 + margin;
  return r;
}

int rademacher(unsigned k, double t) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const double u = std::ldexp(t, static_cast<int>(k));
  const double f = std::floor(u);
  if (u == f) return 0;
  return std::fmod(f, 2.0) == 0.0 ? 1 : -1;
}

RademacherProbe rademacher_series_probe(const WeightSequence& a, std::span<const double> t_samples,
                                        std::uint64_t k_max) {
  if (k_max < 64) throw std::invalid_argument("k_max must be >= 64");
  if (t_samples.size() < 100) throw std::invalid_argument("at least 100 samples required");
  const std::uint64_t k_quarter = k_max / 4, k_half = k_max / 2;
  std::vector<double> weights(k_max + 1, 0.0);
  for (std::uint64_t k = 1; k <= k_max; ++k) weights[k] = a(k);

  RademacherProbe out;
  out.k_max = k_max;
  NeumaierSum tail, previous_tail;
  for (std::uint64_t k = k_half + 1; k <= k_max; ++k) tail.add(weights[k] * weights[k]);
  for (std::uint64_t k = k_quarter + 1; k <= k_half; ++k) previous_tail.add(weights[k] * weights[k]);
  out.tail_sum = tail.value();
  out.tail_ratio = previous_tail.value() > 0.0 ? out.tail_sum / previous_tail.value() : 0.0;
  out.divergence_flagged = out.tail_ratio >= 0.9;

  const auto sums = map_chunks(0, t_samples.size(), 64, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::array<double, 3>> v;
    for (std::uint64_t s = lo; s < hi; ++s) {
      const double t = t_samples[s];
      if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("sample outside [0,1)");
      // Exact binary digits of t first, then a stream seeded by t's bits.
      double rest = t;
      std::uint64_t state = std::bit_cast<std::uint64_t>(t);
      std::uint64_t word = 0;
      unsigned left = 0;
      NeumaierSum S;
      std::array<double, 3> at{};
      for (std::uint64_t k = 1; k <= k_max; ++k) {
        unsigned digit;
        if (k <= 53) {
          rest *= 2.0;
          digit = rest >= 1.0;
          rest -= digit;
        } else {
          if (left == 0) {
            word = splitmix64(state);
            left = 64;
          }
          digit = word & 1u;
          word >>= 1;
          --left;
        }
        S.add(weights[k] * (1.0 - 2.0 * digit));
        if (k == k_quarter) at[0] = S.value();
        if (k == k_half) at[1] = S.value();
      }
      at[2] = S.value();
      v.push_back(at);
    }
    return v;
  });
  for (const auto& c : sums) out.partial_sums.insert(out.partial_sums.end(), c.begin(), c.end());
  const double bound = 10.0 * std::sqrt(out.tail_sum);
  std::size_t good = 0;
  for (const auto& s : out.partial_sums) good += std::abs(s[2] - s[1]) < bound || (bound == 0.0 && s[2] == s[1]);
  out.cauchy_fraction = static_cast<double>(good) / static_cast<double>(out.partial_sums.size());
  return out;
}

LindebergResult lindeberg_bernoulli(std::span<const double> p, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (p.empty()) throw std::invalid_argument("empty family");
  NeumaierSum var;
  for (double q : p) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("probabilities must lie in (0,1)");
    var.add(q * (1.0 - q));
  }
  const double s = std::sqrt(var.value());
  const double cut = eps * s;
  NeumaierSum tail;
  for (double q : p) {
    // X = 1 - q with probability q, X = -q otherwise.
    if (1.0 - q > cut) tail.add(q * (1.0 - q) * (1.0 - q));
    if (q > cut) tail.add((1.0 - q) * q * q);
  }
  return {tail.value() / var.value(), s};
}

double weight_condition_check(const WeightSequence& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  NeumaierSum sq;
  double peak = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double v = a(k);
    peak = std::max(peak, std::abs(v));
    sq.add(v * v);
  }
  if (peak == 0.0) throw std::invalid_argument("all weights are zero");
  return peak / std::sqrt(sq.value());
}

std::uint64_t grid_numerator(std::uint64_t i, std::uint64_t grid_size) {
  return ((2 * i - 1) * kGridModulus + grid_size) / (2 * grid_size);
}

EmpiricalCDF salem_zygmund_cdf(const GapSequence& seq, std::uint64_t m_terms, std::uint64_t grid_size, double min_gap) {
  if (m_terms == 0) throw std::invalid_argument("m_terms must be >= 1");
  if (grid_size < 10000) throw std::invalid_argument("grid size must be >= 10^4");
  if (m_terms >= 2 && hadamard_check(seq, m_terms - 1).min_ratio < min_gap) throw std::invalid_argument("not Hadamard");
  std::vector<std::uint64_t> residues;
  for (std::uint64_t k = 1; k <= m_terms; ++k) residues.push_back(seq.residue(k, kGridModulus));
  const double scale = 1.0 / std::sqrt(static_cast<double>(m_terms) / 2.0);
  const double P = static_cast<double>(kGridModulus);
  return grid_law(grid_size, [&](std::uint64_t i) {
    const std::uint64_t j = grid_numerator(i, grid_size);
    NeumaierSum s;
    for (auto r : residues) s.add(std::cos(kTwoPi * static_cast<double>(mulmod(r, j, kGridModulus)) / P));
    return s.value() * scale;
  });
}

PeriodicFunction PeriodicFunction::from_callable(std::function<double(double)> f, std::string label,
                                                 bool keep_closed_form) {
  PeriodicFunction out;
  out.samples.resize(kSamples);
  for (std::size_t i = 0; i < kSamples; ++i) out.samples[i] = f(static_cast<double>(i) / kSamples);
  if (keep_closed_form) out.closed_form = std::move(f);
  out.label = std::move(label);
  return out;
}

double PeriodicFunction::operator()(double u) const {
  if (closed_form) return closed_form(u);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(u * kSamples), kSamples - 1);
  return samples[i];
}

KacSigma2 kac_sigma2(const PeriodicFunction& f, unsigned k_max) {
  constexpr std::size_t G = PeriodicFunction::kSamples;
  if (f.samples.size() != G) throw std::invalid_argument("function must carry 4096 samples");
  if (k_max > 10) throw std::invalid_argument("k_max too large for the sample grid");
  NeumaierSum mean;
  for (double v : f.samples) mean.add(v);
  if (std::abs(mean.value() / G) > 1e-9) throw std::invalid_argument("nonzero mean");

  // The periodic trapezoid rule is the plain sample average.
  auto inner = [&](std::size_t stride) {
    NeumaierSum s;
    for (std::size_t i = 0; i < G; ++i) s.add(f.samples[i] * f.samples[(i * stride) % G]);
    return s.value() / G;
  };
  KacSigma2 out;
  NeumaierSum total;
  total.add(inner(1));
  for (unsigned k = 1; k <= k_max; ++k) {
    const double term = 2.0 * inner(std::size_t{1} << k);
    total.add(term);
    out.last_term = std::abs(term);
  }
  out.sigma2 = total.value();
  return out;
}

EmpiricalCDF kac_clt_cdf(const PeriodicFunction& f, std::uint64_t n_terms, std::uint64_t grid_size) {
  if (n_terms == 0) throw std::invalid_argument("n_terms must be >= 1");
  if (grid_size < 10000) throw std::invalid_argument("grid size must be >= 10^4");
  const double sigma2 = kac_sigma2(f).sigma2;
  if (sigma2 < 1e-6) throw std::invalid_argument("degenerate variance");
  std::vector<std::uint64_t> residues;
  for (std::uint64_t k = 1; k <= n_terms; ++k) residues.push_back(powmod(2, k, kGridModulus));
  const double scale = 1.0 / std::sqrt(sigma2 * static_cast<double>(n_terms));
  const double P = static_cast<double>(kGridModulus);
  return grid_law(grid_size, [&](std::uint64_t i) {
    const std::uint64_t j = grid_numerator(i, grid_size);
    NeumaierSum s;
    for (auto r : residues) s.add(f(static_cast<double>(mulmod(r, j, kGridModulus)) / P));
    return s.value() * scale;
  });
}

}  // namespace reldens
