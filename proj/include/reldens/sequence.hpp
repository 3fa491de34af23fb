#pragma once

#include "reldens/core.hpp"

#include <functional>
#include <optional>
#include <string>

namespace reldens {

/// A deterministic real sequence n -> x_n, n >= 1.
struct RealSeq {
  std::function<double(std::uint64_t)> generator;
  std::optional<Interval> range_hint;
  std::string label;

  double operator()(std::uint64_t n) const { return generator(n); }
};

/// frac(n alpha), the Kronecker sequence.
RealSeq kronecker(Frequency alpha, std::string label = "kronecker");

/// cos(2 pi n alpha), with the phase reduced before the cosine.
RealSeq cosine_sequence(Frequency alpha, std::string label = "cosine");

/// 1 if the j-th binary digit of n is set, else 0.
RealSeq digit_indicator(unsigned digit);

/// Pointwise sum x_n + y_n.
RealSeq operator+(const RealSeq& x, const RealSeq& y);

}  // namespace reldens
