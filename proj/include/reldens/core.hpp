#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reldens {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Thrown when a computation would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required_bytes)
      : std::runtime_error(what + " (requires " + std::to_string(required_bytes) + " bytes)"),
        required_bytes_(required_bytes) {}

  std::uint64_t required_bytes() const noexcept { return required_bytes_; }

 private:
  std::uint64_t required_bytes_;
};

/// Memory budget in bytes. Defaults to RELDENS_MEMORY_BUDGET or 4 GiB.
std::uint64_t memory_budget();
void set_memory_budget(std::uint64_t bytes);
void require_memory(std::uint64_t bytes, const std::string& what);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }
};

/// Neumaier-compensated running sum.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const NeumaierSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// x - floor(x), always in [0, 1).
inline double frac(double x) {
  double f = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  return f >= 1.0 ? 0.0 : f;
}

/// A real frequency held as an unevaluated sum hi + lo, so that frac(n * alpha)
/// stays accurate to about 1e-16 for n up to 2^53.
class Frequency {
 public:
  constexpr Frequency() = default;
  constexpr explicit Frequency(double hi, double lo = 0.0) : hi_(hi), lo_(lo) {}

  static Frequency sqrt_of(std::uint64_t k);
  static Frequency golden_ratio();

  double approx() const { return hi_ + lo_; }
  double hi() const { return hi_; }
  double lo() const { return lo_; }

  /// alpha * s, exact in the leading part.
  Frequency scaled(double s) const;

  /// frac(n * alpha).
  double phase(std::uint64_t n) const {
    const double nd = static_cast<double>(n);
    const double p = nd * hi_;
    const double e = std::fma(nd, hi_, -p);
    return frac((p - std::floor(p)) + (e + nd * lo_));
  }

  /// frac(t * alpha) for a real t (the product t * hi is split exactly).
  double phase(double t) const {
    const double p = t * hi_;
    const double e = std::fma(t, hi_, -p);
    return frac((p - std::floor(p)) + (e + t * lo_));
  }

  friend bool operator==(const Frequency&, const Frequency&) = default;

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

/// Parses "golden", "sqrt:K", "p/q" or a decimal literal.
Frequency parse_frequency(const std::string& text);

/// Sorted, de-duplicated checkpoints N_i ~ n_max^(i/(count-1)), always ending at n_max.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_max, std::size_t count);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

}  // namespace reldens
