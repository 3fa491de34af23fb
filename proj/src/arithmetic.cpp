#include "reldens/arithmetic.hpp"

#include "reldens/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace reldens {

std::vector<std::uint32_t> primes_up_to(std::uint64_t x) {
  if (x > kMaxSieveN) throw std::invalid_argument("prime bound too large");
  std::vector<std::uint32_t> primes;
  if (x < 2) return primes;
  require_memory(x + 1, "prime sieve");
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= x; q += p) composite[q] = true;
  }
  return primes;
}

SieveTable sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes) {
  if (lo == 0 || hi < lo || hi - 1 > kMaxSieveN) throw std::invalid_argument("bad sieve segment");
  SieveTable table{lo, hi, std::vector<std::uint8_t>(hi - lo, 0)};
  std::vector<std::uint32_t> cofactor(hi - lo);
  for (std::uint64_t n = lo; n < hi; ++n) cofactor[n - lo] = static_cast<std::uint32_t>(n);
  for (const std::uint32_t p : base_primes) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp > hi - 1) break;
    for (std::uint64_t n = (lo + p - 1) / p * p; n < hi; n += p) {
      const std::size_t i = n - lo;
      ++table.omega_values[i];
      std::uint32_t r = cofactor[i] / p;
      while (r % p == 0) r /= p;
      cofactor[i] = r;
    }
  }
  // What is left above 1 is a single prime exceeding sqrt(n).
  for (std::size_t i = 0; i < cofactor.size(); ++i) table.omega_values[i] += cofactor[i] > 1;
  return table;
}

namespace {

std::vector<std::uint32_t> base_primes_for(std::uint64_t n_max) {
  if (n_max > kMaxSieveN)
    throw ResourceError("sieve limit " + std::to_string(kMaxSieveN) + " exceeded", n_max);
  return primes_up_to(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_max))) + 1);
}

void check_sieve_memory(std::uint64_t segment) {
  require_memory(thread_count() * segment * (sizeof(std::uint32_t) + 1), "omega sieve segments");
}

}  // namespace

void omega_range(std::uint64_t n_max, const std::function<void(const SieveTable&)>& visit, std::uint64_t segment) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  check_sieve_memory(segment);
  const auto base = base_primes_for(n_max);
  const std::uint64_t wave = segment * thread_count();
  for (std::uint64_t start = 1; start <= n_max; start += wave) {
    const std::uint64_t stop = std::min(n_max + 1, start + wave);
    const auto tables = map_chunks(start, stop, segment, [&](std::uint64_t lo, std::uint64_t hi) {
      return sieve_segment(lo, hi, base);
    });
    for (const auto& t : tables) visit(t);
  }
}

std::vector<std::uint64_t> omega_histogram(std::uint64_t n_max, std::uint64_t segment) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  check_sieve_memory(segment);
  const auto base = base_primes_for(n_max);
  auto hist = reduce_chunks(
      1, n_max + 1, segment, std::vector<std::uint64_t>(32, 0),
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& acc) {
        const auto t = sieve_segment(lo, hi, base);
        for (auto w : t.omega_values) ++acc[w];
      },
      [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

unsigned omega_trial_division(std::uint64_t n) {
  unsigned w = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++w;
    while (n % p == 0) n /= p;
  }
  return w + (n > 1);
}

PrimeReciprocalSum prime_reciprocal_sum(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("x must be >= 2");
  NeumaierSum s;
  for (auto p : primes_up_to(x)) s.add(1.0 / static_cast<double>(p));
  PrimeReciprocalSum out;
  out.sum = s.value();
  out.bound = std::log(std::log(static_cast<double>(x))) - 0.5;
  out.holds = out.sum > out.bound;
  return out;
}

EmpiricalCDF erdos_kac_cdf_from_histogram(std::span<const std::uint64_t> hist, std::uint64_t n_max) {
  const double L = std::log(std::log(static_cast<double>(n_max)));
  const double root = std::sqrt(L);
  std::vector<std::pair<double, std::uint64_t>> pairs;
  for (std::size_t w = 0; w < hist.size(); ++w) pairs.emplace_back((static_cast<double>(w) - L) / root, hist[w]);
  return EmpiricalCDF::from_weighted(std::move(pairs));
}

EmpiricalCDF erdos_kac_cdf(std::uint64_t n_max, ErdosKacOptions options) {
  if (n_max < 100) throw std::invalid_argument("n_max must be >= 100");
  if (options.mode == NormalizationMode::LnLnN) return erdos_kac_cdf_from_histogram(omega_histogram(n_max), n_max);

  const std::uint64_t first = std::max<std::uint64_t>(options.skip_through + 1, 3);
  if (first > n_max) throw std::invalid_argument("nothing left after the small-n cutoff");
  require_memory((n_max - first + 1) * sizeof(double), "erdos-kac samples");
  std::vector<double> samples;
  samples.reserve(n_max - first + 1);
  omega_range(n_max, [&](const SieveTable& t) {
    for (std::uint64_t n = std::max(t.lo, first); n < t.hi; ++n) {
      const double L = std::log(std::log(static_cast<double>(n)));
      samples.push_back((static_cast<double>(t.omega(n)) - L) / std::sqrt(L));
    }
  });
  return EmpiricalCDF::from_samples(std::move(samples));
}

OmegaMoments omega_moments(std::span<const std::uint64_t> hist) {
  std::uint64_t n = 0, s = 0, ss = 0;
  for (std::size_t w = 0; w < hist.size(); ++w) {
    n += hist[w];
    s += w * hist[w];
    ss += w * w * hist[w];
  }
  const double mean = static_cast<double>(s) / static_cast<double>(n);
  return {mean, static_cast<double>(ss) / static_cast<double>(n) - mean * mean};
}

double hardy_ramanujan_fraction(std::span<const std::uint64_t> hist, std::uint64_t n_max, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double L = std::log(std::log(static_cast<double>(n_max)));
  std::uint64_t bad = 0, total = 0;
  for (std::size_t w = 0; w < hist.size(); ++w) {
    total += hist[w];
    if (std::abs(static_cast<double>(w) / L - 1.0) >= eps) bad += hist[w];
  }
  return static_cast<double>(bad) / static_cast<double>(total);
}

double hardy_ramanujan_fraction(std::uint64_t n_max, double eps) {
  if (n_max < 100) throw std::invalid_argument("n_max must be >= 100");
  return hardy_ramanujan_fraction(omega_histogram(n_max), n_max, eps);
}

double standardized_law_ks(std::span<const std::uint64_t> counts, unsigned m) {
  const double mean = m / 2.0, sd = std::sqrt(m / 4.0);
  std::vector<std::pair<double, std::uint64_t>> pairs;
  for (std::size_t k = 0; k < counts.size(); ++k) pairs.emplace_back((static_cast<double>(k) - mean) / sd, counts[k]);
  return EmpiricalCDF::from_weighted(std::move(pairs)).ks_to(standard_normal());
}

DigitClt digit_clt_cdf(unsigned m) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (m > 30) throw std::invalid_argument("enumeration too large");
  const std::uint64_t top = std::uint64_t{1} << m;
  require_memory(top * 2 * sizeof(double), "digit-sum samples");
  DigitClt out;
  out.counts = reduce_chunks(
      0, top, kScanChunk, std::vector<std::uint64_t>(m + 1, 0),
      [](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& acc) {
        for (std::uint64_t n = lo; n < hi; ++n) ++acc[s2(n)];
      },
      [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  std::map<std::int64_t, Rational> masses;
  for (unsigned k = 0; k <= m; ++k) masses[k] = Rational(out.counts[k], BigInt(top));
  out.exact_law = DiscreteLaw<Rational>(std::move(masses));

  auto chunks = map_chunks(2, top + 1, kScanChunk, [](std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> v;
    v.reserve(hi - lo);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double L = std::log2(static_cast<double>(n));
      v.push_back((static_cast<double>(s2(n)) - 0.5 * L) / std::sqrt(0.25 * L));
    }
    return v;
  });
  std::vector<double> samples;
  samples.reserve(top - 1);
  for (auto& c : chunks) {
    samples.insert(samples.end(), c.begin(), c.end());
    std::vector<double>().swap(c);
  }
  out.empirical = EmpiricalCDF::from_samples(std::move(samples));
  return out;
}

}  // namespace reldens
