#pragma once

// Number-theoretic kernels: a segmented distinct-prime-factor sieve, binary
// digit functions, prime reciprocal sums, and the Erdős–Kac, Hardy–Ramanujan
// and sum-of-digits experiments built on them.

#include "reldens/empirical_cdf.hpp"
#include "reldens/sequence_distributions.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace reldens {

/// omega(n) for n in [lo, hi).
struct SieveTable {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint8_t> omega_values;

  std::uint8_t omega(std::uint64_t n) const { return omega_values[n - lo]; }
};

inline constexpr std::uint64_t kDefaultSegment = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kMaxSieveN = 4'000'000'000ULL;

/// Primes p <= x.
std::vector<std::uint32_t> primes_up_to(std::uint64_t x);

/// Sieves [lo, hi) using base primes covering sqrt(hi - 1).
SieveTable sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes);

/// Visits segments covering 1..n_max in increasing order. Segments are
/// computed in parallel and handed to `visit` in order.
void omega_range(std::uint64_t n_max, const std::function<void(const SieveTable&)>& visit,
                 std::uint64_t segment = kDefaultSegment);

/// hist[w] = |{n <= n_max : omega(n) = w}|.
std::vector<std::uint64_t> omega_histogram(std::uint64_t n_max, std::uint64_t segment = kDefaultSegment);

/// omega by trial division.
unsigned omega_trial_division(std::uint64_t n);

/// Number of ones in the binary expansion of n.
inline unsigned s2(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

/// Parity of floor(n / 2^(j-1)), i.e. the j-th binary digit (j = 1 least significant).
inline unsigned binary_digit(unsigned j, std::uint64_t n) { return j > 64 ? 0u : static_cast<unsigned>((n >> (j - 1)) & 1u); }

struct PrimeReciprocalSum {
  double sum = 0.0;
  double bound = 0.0;  // ln ln x - 1/2
  bool holds = false;
};

PrimeReciprocalSum prime_reciprocal_sum(std::uint64_t x);

enum class NormalizationMode { LnLnN, LnLnn };

struct ErdosKacOptions {
  NormalizationMode mode = NormalizationMode::LnLnN;
  /// In LnLnn mode, n <= skip_through is excluded (ln ln n < 1 for n <= 15).
  std::uint64_t skip_through = 15;
};

/// Empirical law of (omega(n) - L) / sqrt(L), L = ln ln N (or ln ln n).
EmpiricalCDF erdos_kac_cdf(std::uint64_t n_max, ErdosKacOptions options = {});

/// Same, from an existing omega histogram (LnLnN mode only).
EmpiricalCDF erdos_kac_cdf_from_histogram(std::span<const std::uint64_t> hist, std::uint64_t n_max);

struct OmegaMoments {
  double mean = 0.0;
  double variance = 0.0;
};

OmegaMoments omega_moments(std::span<const std::uint64_t> hist);

/// Fraction of n <= n_max with |omega(n) / ln ln N - 1| >= eps.
double hardy_ramanujan_fraction(std::uint64_t n_max, double eps);
double hardy_ramanujan_fraction(std::span<const std::uint64_t> hist, std::uint64_t n_max, double eps);

struct DigitClt {
  /// counts[k] = |{0 <= n < 2^m : s2(n) = k}|.
  std::vector<std::uint64_t> counts;
  DiscreteLaw<Rational> exact_law;
  /// Law of (s2(n) - log2(n)/2) / sqrt(log2(n)/4) over n in 2..2^m.
  EmpiricalCDF empirical;
};

/// Requires 2 <= m <= 30.
DigitClt digit_clt_cdf(unsigned m);

/// KS distance between the standardized exact law of `counts` (out of 2^m) and Phi.
double standardized_law_ks(std::span<const std::uint64_t> counts, unsigned m);

}  // namespace reldens
