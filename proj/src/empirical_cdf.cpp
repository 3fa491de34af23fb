#include "reldens/empirical_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace reldens {

EmpiricalCDF EmpiricalCDF::from_samples(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  EmpiricalCDF cdf;
  std::size_t write = 0;
  std::uint64_t seen = 0;
  for (std::size_t read = 0; read < samples.size(); ++read) {
    ++seen;
    if (read + 1 == samples.size() || samples[read + 1] != samples[read]) {
      samples[write++] = samples[read];
      cdf.cumulative_.push_back(seen);
    }
  }
  samples.resize(write);
  samples.shrink_to_fit();
  cdf.values_ = std::move(samples);
  return cdf;
}

EmpiricalCDF EmpiricalCDF::from_weighted(std::vector<std::pair<double, std::uint64_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  EmpiricalCDF cdf;
  std::uint64_t seen = 0;
  for (const auto& [v, c] : pairs) {
    if (c == 0) continue;
    seen += c;
    if (!cdf.values_.empty() && cdf.values_.back() == v) {
      cdf.cumulative_.back() = seen;
    } else {
      cdf.values_.push_back(v);
      cdf.cumulative_.push_back(seen);
    }
  }
  return cdf;
}

std::uint64_t EmpiricalCDF::count_le(double z) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), z);
  if (it == values_.begin()) return 0;
  return cumulative_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

double EmpiricalCDF::eval(double z) const {
  const auto n = n_total();
  if (n == 0) throw std::logic_error("empty empirical distribution");
  return static_cast<double>(count_le(z)) / static_cast<double>(n);
}

double EmpiricalCDF::ks_to(const EvaluableCDF& G) const {
  const auto n = static_cast<double>(n_total());
  if (values_.empty()) throw std::invalid_argument("empty grid");
  double worst = 0.0;
  double below = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double g = G(values_[i]);
    const double at = static_cast<double>(cumulative_[i]) / n;
    worst = std::max({worst, std::abs(at - g), std::abs(below - g)});
    below = at;
  }
  return worst;
}

double EmpiricalCDF::mean() const {
  NeumaierSum s;
  for (std::size_t i = 0; i < values_.size(); ++i) s.add(values_[i] * static_cast<double>(count_at(i)));
  return s.value() / static_cast<double>(n_total());
}

double EmpiricalCDF::variance() const {
  const double mu = mean();
  NeumaierSum s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double d = values_[i] - mu;
    s.add(d * d * static_cast<double>(count_at(i)));
  }
  return s.value() / static_cast<double>(n_total());
}

EvaluableCDF EmpiricalCDF::as_evaluable() const {
  auto self = std::make_shared<const EmpiricalCDF>(*this);
  std::optional<Interval> support;
  if (!values_.empty()) support = Interval{values_.front(), values_.back()};
  return EvaluableCDF{[self](double z) { return self->eval(z); }, support};
}

}  // namespace reldens
