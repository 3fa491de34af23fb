#include "reldens/parallel.hpp"

#include "reldens/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace reldens {

namespace {

std::atomic<std::size_t> g_threads{0};
std::atomic<std::uint64_t> g_budget{0};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RELDENS_MEMORY_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{4} << 30;
}

}  // namespace

std::size_t thread_count() {
  const std::size_t n = g_threads.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(std::size_t n) { g_threads = n; }

std::uint64_t memory_budget() {
  const auto b = g_budget.load();
  return b != 0 ? b : default_budget();
}

void set_memory_budget(std::uint64_t bytes) { g_budget = bytes; }

void require_memory(std::uint64_t bytes, const std::string& what) {
  if (bytes > memory_budget()) throw ResourceError(what + " exceeds memory budget", bytes);
}

Frequency Frequency::sqrt_of(std::uint64_t k) {
  const double kd = static_cast<double>(k);
  const double hi = std::sqrt(kd);
  const double residual = std::fma(-hi, hi, kd);
  return Frequency(hi, residual / (2.0 * hi));
}

Frequency Frequency::golden_ratio() {
  const Frequency s = sqrt_of(5);
  const double sum = 1.0 + s.hi();
  const double err = (1.0 - (sum - (sum - 1.0))) + (s.hi() - (sum - 1.0));
  return Frequency(sum / 2.0, (err + s.lo()) / 2.0);
}

Frequency Frequency::scaled(double s) const {
  const double p = hi_ * s;
  const double e = std::fma(hi_, s, -p) + lo_ * s;
  const double hi = p + e;
  return Frequency(hi, e - (hi - p));
}

Frequency parse_frequency(const std::string& text) {
  if (text == "golden") return Frequency::golden_ratio();
  if (text.rfind("sqrt:", 0) == 0) {
    const auto k = std::stoull(text.substr(5));
    return Frequency::sqrt_of(k);
  }
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double p = std::stod(text.substr(0, slash));
    const double q = std::stod(text.substr(slash + 1));
    if (q == 0.0) throw std::invalid_argument("zero denominator in frequency '" + text + "'");
    const double hi = p / q;
    return Frequency(hi, std::fma(-hi, q, p) / q);
  }
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad frequency '" + text + "'");
  return Frequency(v);
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_max, std::size_t count) {
  std::vector<std::uint64_t> out;
  if (n_max == 0 || count == 0) return out;
  const double log_max = std::log(static_cast<double>(n_max));
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    auto n = static_cast<std::uint64_t>(std::llround(std::exp(t * log_max)));
    out.push_back(std::clamp<std::uint64_t>(n, 1, n_max));
  }
  out.back() = n_max;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace reldens
