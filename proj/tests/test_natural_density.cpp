#include <doctest.h>

#include "reldens/natural_density.hpp"

#include <cmath>

using namespace reldens;

TEST_CASE("exact densities of periodic sets") {
  CHECK(density_exact(IntegerSetSpec::progression(6, 6)) == Rational(1, 6));
  CHECK(density_exact(IntegerSetSpec::binary_digit(3)) == Rational(1, 2));
  const auto inter = IntegerSetSpec::intersection({IntegerSetSpec::progression(2, 2), IntegerSetSpec::progression(4, 4)});
  CHECK(density_exact(inter) == Rational(1, 4));
  CHECK(density_exact(IntegerSetSpec::complement(IntegerSetSpec::progression(3, 1))) == Rational(2, 3));
  // Digits 1 and 2 both set: n = 3 mod 4.
  const auto digits = IntegerSetSpec::intersection({IntegerSetSpec::binary_digit(1), IntegerSetSpec::binary_digit(2)});
  CHECK(density_exact(digits) == Rational(1, 4));
  CHECK(density_exact(IntegerSetSpec::intersection({IntegerSetSpec::progression(6, 1), IntegerSetSpec::binary_digit(2)})) ==
        Rational(1, 12));
}

TEST_CASE("eventually periodic sets ignore their head") {
  const auto s = IntegerSetSpec::periodic(3, {true, false}, {true, true, true});
  CHECK(s.contains(1));
  CHECK(s.contains(2));
  CHECK(density_exact(s) == Rational(1, 2));
  const auto singleton = IntegerSetSpec::periodic(5, {false}, {false, false, false, false, true});
  CHECK(singleton.contains(5));
  CHECK_FALSE(singleton.contains(6));
  CHECK(density_exact(singleton) == 0);
  CHECK_THROWS(IntegerSetSpec::periodic(1, {true}, {true, true}));
}

TEST_CASE("membership conventions") {
  const auto a = IntegerSetSpec::progression(4, 4);
  CHECK(a.contains(4));
  CHECK(a.contains(8));
  CHECK_FALSE(a.contains(2));
  CHECK(IntegerSetSpec::binary_digit(2).contains(6));   // 110
  CHECK_FALSE(IntegerSetSpec::binary_digit(1).contains(6));
  const auto block = IntegerSetSpec::block_example();
  CHECK_FALSE(block.contains(2));
  CHECK(block.contains(3));
  CHECK(block.contains(4));
  CHECK_FALSE(block.contains(5));
  CHECK(block.contains(9));
  CHECK(block.contains(16));
  CHECK_FALSE(block.contains(17));
  CHECK(block.contains(33));
  CHECK_THROWS(IntegerSetSpec::progression(3, 0));
  CHECK_THROWS(IntegerSetSpec::progression(3, 4));
  CHECK_THROWS(IntegerSetSpec::binary_digit(0));
}

TEST_CASE("non-symbolic sets have no exact density") {
  CHECK_THROWS_WITH(density_exact(IntegerSetSpec::block_example()), "no exact density");
  const auto squares = IntegerSetSpec::predicate(
      [](std::uint64_t n) {
        const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
        return r * r == n;
      },
      "squares");
  CHECK_THROWS(density_exact(squares));
  CHECK_FALSE(squares.is_symbolic());
  CHECK_FALSE(periodic_form(squares).has_value());
}

TEST_CASE("streaming estimates") {
  const auto block = density_estimate(IntegerSetSpec::block_example(), std::uint64_t{1} << 22, 32);
  CHECK(block.verdict == Verdict::Oscillating);
  CHECK(block.limsup_probe >= 0.66);
  CHECK(block.liminf_probe <= 0.34);
  CHECK_FALSE(block.value.has_value());

  const auto third = density_estimate(IntegerSetSpec::progression(3, 3), 1000000, 32);
  CHECK(third.verdict == Verdict::Converged);
  REQUIRE(third.value);
  CHECK(std::abs(*third.value - 1.0 / 3.0) < 1e-3);

  const auto squares = IntegerSetSpec::predicate(
      [](std::uint64_t n) {
        const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
        return r * r == n;
      },
      "squares");
  const auto sq = density_estimate(squares, 1000000, 32);
  CHECK(sq.verdict == Verdict::Converged);
  REQUIRE(sq.value);
  CHECK(*sq.value == doctest::Approx(0.001));

  CHECK_THROWS(density_estimate(squares, 1, 32));
  CHECK_THROWS(density_estimate(squares, std::uint64_t{1} << 63, 32));
  CHECK(exact_estimate(IntegerSetSpec::progression(5, 2)).verdict == Verdict::ExactKnown);
}

TEST_CASE("oscillation probes") {
  std::vector<unsigned> e;
  for (unsigned k = 10; k <= 22; ++k) e.push_back(k);
  const auto block = oscillation_probe(IntegerSetSpec::block_example(), e);
  CHECK(std::abs(block.limsup - 2.0 / 3.0) < 0.01);
  CHECK(std::abs(block.liminf - 1.0 / 3.0) < 0.01);
  const auto comp = oscillation_probe(IntegerSetSpec::complement(IntegerSetSpec::block_example()), e);
  CHECK(std::abs(comp.limsup - 2.0 / 3.0) < 0.01);
  CHECK(std::abs(comp.liminf - 1.0 / 3.0) < 0.01);
  std::vector<unsigned> e2;
  for (unsigned k = 10; k <= 20; ++k) e2.push_back(k);
  const auto even = oscillation_probe(IntegerSetSpec::progression(2, 2), e2);
  CHECK(even.limsup == 0.5);
  CHECK(even.liminf == 0.5);
  const std::vector<unsigned> few{10, 11, 12};
  CHECK_THROWS_WITH(oscillation_probe(IntegerSetSpec::block_example(), few), "insufficient probes");
}

TEST_CASE("continuous densities") {
  const auto half = continuous_density([](double t) { return std::cos(kTwoPi * t) <= 0.0; }, 1e4, 1e-3);
  REQUIRE(half.value);
  CHECK(std::abs(*half.value - 0.5) < 2e-3);
  const auto unit = continuous_density([](double t) { return t > 0.0 && t < 1.0; }, 1e4, 1e-3);
  REQUIRE(unit.value);
  CHECK(*unit.value == doctest::Approx(1e-4).epsilon(1e-6));
  const double r2 = std::sqrt(2.0);
  const auto third = continuous_density([r2](double t) { return std::cos(kTwoPi * r2 * t) <= -0.5; }, 1e4, 1e-3);
  REQUIRE(third.value);
  CHECK(std::abs(*third.value - 1.0 / 3.0) < 5e-3);
  CHECK_THROWS(continuous_density([](double) { return true; }, 1.0, 0.5));
}

TEST_CASE("failure of countable additivity") {
  const auto r7 = no_measure_witness(7);
  REQUIRE(r7.primes.size() == 4);
  for (const auto& c : r7.primes) {
    CHECK(c.all_equal);
    CHECK(c.total == 1);
    CHECK(c.densities.front() == Rational(1, c.prime));
  }
  CHECK(r7.singleton_bound == Rational(1, 7));
  CHECK(r7.singleton_density == 0);
  CHECK(r7.whole_density == 1);
  CHECK(r7.sigma_additivity_fails);
  CHECK(no_measure_witness(97).singleton_bound == Rational(1, 97));
  CHECK(no_measure_witness(3).singleton_bound == Rational(1, 3));
}
