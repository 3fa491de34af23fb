#include <doctest.h>

#include "reldens/core.hpp"
#include "reldens/parallel.hpp"

#include <cmath>
#include <numeric>

using namespace reldens;

TEST_CASE("frac follows the floor convention") {
  CHECK(frac(2.75) == 0.75);
  CHECK(frac(-0.25) == 0.75);
  CHECK(frac(3.0) == 0.0);
  CHECK(frac(-1e-300) == 0.0);  // 1 - tiny rounds to 1
}

TEST_CASE("neumaier sum keeps small terms") {
  NeumaierSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);
  NeumaierSum a, b;
  a.add(0.1);
  b.add(0.2);
  a.merge(b);
  CHECK(a.value() == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("frequency phases stay accurate at large n") {
  // 50-digit reference values.
  const auto r2 = Frequency::sqrt_of(2), r3 = Frequency::sqrt_of(3), g = Frequency::golden_ratio();
  CHECK(std::abs(r2.phase(std::uint64_t{1000000000}) - 0.37309504880168872) < 1e-15);
  CHECK(std::abs(g.phase(std::uint64_t{1000000000}) - 0.74989484820458683) < 1e-15);
  CHECK(std::abs(r3.phase(std::uint64_t{1000000000}) - 0.56887729352744634) < 1e-15);
  CHECK(std::abs(r2.phase(std::uint64_t{123456789}) - 0.37083353471685479) < 1e-15);
  CHECK(std::abs(g.phase(std::uint64_t{1} << 40) - 0.29095589826170132) < 1e-13);
  CHECK(std::abs(r3.phase(std::uint64_t{1} << 40) - 0.79161424316787588) < 1e-13);
}

TEST_CASE("parse_frequency accepts the documented forms") {
  CHECK(parse_frequency("golden") == Frequency::golden_ratio());
  CHECK(parse_frequency("sqrt:5") == Frequency::sqrt_of(5));
  CHECK(parse_frequency("1/2").approx() == 0.5);
  CHECK(parse_frequency("0.25").approx() == 0.25);
  CHECK_THROWS(parse_frequency("banana"));
  CHECK_THROWS(parse_frequency("1/0"));
}

TEST_CASE("geometric checkpoints end at n_max and increase") {
  const auto c = geometric_checkpoints(1000000, 16);
  CHECK(c.back() == 1000000);
  CHECK(c.front() >= 1);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
  CHECK(geometric_checkpoints(5, 100).size() <= 5);
}

TEST_CASE("memory budget guard") {
  const auto saved = memory_budget();
  set_memory_budget(1024);
  CHECK_THROWS_AS(require_memory(4096, "test"), ResourceError);
  CHECK_NOTHROW(require_memory(512, "test"));
  set_memory_budget(saved);
}

TEST_CASE("chunked scans do not depend on the thread count") {
  const auto saved = thread_count();
  auto run = [] {
    const std::vector<std::uint64_t> probes{10, 1000, 70000, 200000};
    return prefix_scan<NeumaierSum>(200000, probes, [](NeumaierSum& s, std::uint64_t n) { s.add(1.0 / n); });
  };
  set_thread_count(1);
  const auto one = run();
  set_thread_count(7);
  const auto seven = run();
  set_thread_count(saved);
  CHECK(one.total.value() == seven.total.value());
  REQUIRE(one.at_probes.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(one.at_probes[i].value() == seven.at_probes[i].value());
  CHECK(one.at_probes[0].value() == doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));

  const auto counts = reduce_chunks(
      0, 300000, kScanChunk, std::uint64_t{0}, [](std::uint64_t lo, std::uint64_t hi, std::uint64_t& acc) { acc += hi - lo; },
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; });
  CHECK(counts == 300000);
  const auto ordered = map_chunks(0, 10, 3, [](std::uint64_t lo, std::uint64_t) { return lo; });
  CHECK(ordered == std::vector<std::uint64_t>{0, 3, 6, 9});
}

TEST_CASE("worker exceptions propagate") {
  CHECK_THROWS_AS(map_chunks(0, 100, 10,
                             [](std::uint64_t lo, std::uint64_t) -> int {
                               if (lo == 50) throw std::runtime_error("boom");
                               return 0;
                             }),
                  std::runtime_error);
}
