#pragma once

// Relative measure (natural density) of subsets of the positive integers and
// of subsets of (0, inf).

#include "reldens/core.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace reldens {

/// A_{n,k} = {j n + k : j >= 0}, residue k in 1..n (k = n gives the multiples of n).
struct ArithmeticProgression {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 1;
};

/// B_j: integers whose j-th binary digit (j = 1 least significant) is 1.
struct BinaryDigitSet {
  unsigned digit = 1;
};

/// Members above `offset` follow `pattern` with period pattern.size():
/// n > offset is a member iff pattern[(n - offset - 1) % period]. For n <= offset
/// membership is head[n - 1] (false beyond the end of head).
struct EventuallyPeriodic {
  std::uint64_t offset = 0;
  std::vector<bool> pattern;
  std::vector<bool> head;
};

/// Level set {k : a_k = 1} with a_k = 1 exactly on the blocks 2^(2m+1) < k <= 2^(2m+2).
/// Its partial densities at 2^(2m+2) and 2^(2m+1) tend to 2/3 and 1/3.
struct BlockExample {};

struct Predicate {
  std::function<bool(std::uint64_t)> member;
  std::string label = "predicate";
};

class IntegerSetSpec;

struct Intersection {
  std::vector<IntegerSetSpec> parts;
};

struct Complement {
  std::shared_ptr<const IntegerSetSpec> base;
};

class IntegerSetSpec {
 public:
  using Variant = std::variant<ArithmeticProgression, BinaryDigitSet, EventuallyPeriodic, BlockExample, Predicate,
                               Intersection, Complement>;

  IntegerSetSpec(Variant v);  // validates

  static IntegerSetSpec progression(std::uint64_t modulus, std::uint64_t residue);
  static IntegerSetSpec binary_digit(unsigned digit);
  static IntegerSetSpec periodic(std::uint64_t offset, std::vector<bool> pattern, std::vector<bool> head = {});
  static IntegerSetSpec block_example();
  static IntegerSetSpec predicate(std::function<bool(std::uint64_t)> member, std::string label);
  static IntegerSetSpec intersection(std::vector<IntegerSetSpec> parts);
  static IntegerSetSpec complement(IntegerSetSpec base);

  bool contains(std::uint64_t n) const;

  /// True when the set is built only from periodic pieces (no predicate or block example).
  bool is_symbolic() const;

  std::string describe() const;

  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

/// Period and offset of a symbolic set: membership of n > offset depends on n mod period only.
struct PeriodicForm {
  std::uint64_t period = 1;
  std::uint64_t offset = 0;
};

/// Joint period of a symbolic spec, or nullopt for block example / predicates.
/// Throws when the period exceeds `max_period`.
std::optional<PeriodicForm> periodic_form(const IntegerSetSpec& spec,
                                          std::uint64_t max_period = std::uint64_t{1} << 26);

/// Exact density of a symbolic spec; throws "no exact density" otherwise.
Rational density_exact(const IntegerSetSpec& spec);

enum class Verdict { ExactKnown, Converged, Oscillating, Inconclusive };

std::string to_string(Verdict v);

struct DensityEstimate {
  std::optional<double> value;
  /// (N, |A ∩ {1..N}| / N). For continuous estimates N is the horizon T.
  std::vector<std::pair<double, double>> checkpoints;
  double limsup_probe = 0.0;
  double liminf_probe = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

struct DensityOptions {
  double tol = 1e-3;
};

/// Streams n = 1..n_max, recording partial densities at geometric checkpoints.
/// limsup/liminf probes also include every power of two in the upper half of
/// the log-range.
DensityEstimate density_estimate(const IntegerSetSpec& spec, std::uint64_t n_max, std::size_t checkpoint_count,
                                 DensityOptions options = {});

/// The exact density wrapped as an estimate (verdict ExactKnown).
DensityEstimate exact_estimate(const IntegerSetSpec& spec);

struct ProbeRange {
  double liminf = 0.0;
  double limsup = 0.0;
};

/// Partial densities at N = 2^e; min and max over the upper half of the probes.
ProbeRange oscillation_probe(const IntegerSetSpec& spec, std::span<const unsigned> probe_exponents);

/// Midpoint-rule estimate of (1/T) ∫_0^T 1_A(t) dt at geometric horizons T <= t_max.
DensityEstimate continuous_density(const std::function<bool(double)>& indicator, double t_max, double step,
                                   DensityOptions options = {}, std::size_t checkpoint_count = 32);

struct ResidueClassCheck {
  std::uint64_t prime = 0;
  std::vector<Rational> densities;  // A_{p,1..p}
  Rational total;
  bool all_equal = false;
};

struct NoMeasureReport {
  std::vector<ResidueClassCheck> primes;
  /// Each singleton {m} lies in one class A_{p,k}, so its density is at most 1/p.
  Rational singleton_bound;
  Rational singleton_density;
  Rational whole_density;
  bool sigma_additivity_fails = false;
};

NoMeasureReport no_measure_witness(std::uint64_t prime_bound);

}  // namespace reldens
