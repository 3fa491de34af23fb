#include "reldens/sequence.hpp"

#include <cmath>

namespace reldens {

RealSeq kronecker(Frequency alpha, std::string label) {
  return RealSeq{[alpha](std::uint64_t n) { return alpha.phase(n); }, Interval{0.0, 1.0, true, false},
                 std::move(label)};
}

RealSeq cosine_sequence(Frequency alpha, std::string label) {
  return RealSeq{[alpha](std::uint64_t n) { return std::cos(kTwoPi * alpha.phase(n)); }, Interval{-1.0, 1.0},
                 std::move(label)};
}

RealSeq digit_indicator(unsigned digit) {
  return RealSeq{[digit](std::uint64_t n) { return static_cast<double>((n >> (digit - 1)) & 1u); },
                 Interval{0.0, 1.0}, "1_B" + std::to_string(digit)};
}

RealSeq operator+(const RealSeq& x, const RealSeq& y) {
  std::optional<Interval> hint;
  if (x.range_hint && y.range_hint) hint = Interval{x.range_hint->lo + y.range_hint->lo, x.range_hint->hi + y.range_hint->hi};
  return RealSeq{[gx = x.generator, gy = y.generator](std::uint64_t n) { return gx(n) + gy(n); }, hint,
                 x.label + "+" + y.label};
}

}  // namespace reldens
