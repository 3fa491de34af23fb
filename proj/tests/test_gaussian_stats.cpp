#include <doctest.h>

#include "reldens/empirical_cdf.hpp"
#include "reldens/gaussian_stats.hpp"

#include <cmath>

using namespace reldens;

TEST_CASE("phi matches the reference value") {
  // 50-digit reference.
  CHECK(std::abs(phi_cdf(1.0) - 0.8413447460685429486) < 1e-15);
  CHECK(phi_cdf(0.0) == 0.5);
  CHECK(phi_cdf(-40.0) >= 0.0);
  CHECK(phi_cdf(-8.0) > 0.0);  // erfc keeps the left tail
  CHECK(std::abs(phi_cdf(2.5) + phi_cdf(-2.5) - 1.0) < 1e-15);
}

TEST_CASE("binomial masses") {
  CHECK(binomial_pmf_exact(20, 10) == Rational(184756, 1048576));
  CHECK(binomial_pmf_exact(20, 21) == 0);
  CHECK(binomial_pmf_exact(20, -1) == 0);
  CHECK_THROWS(binomial_pmf_exact(65, 3));
  CHECK(binomial_coefficient(64, 32) == BigInt("1832624140942590534"));
  CHECK(std::abs(binomial_pmf(100, 50) - 0.079589237387178761498) < 1e-14);
  CHECK(std::abs(binomial_pmf(200, 80) - 0.0010251040221101833007) < 1e-15);
  CHECK(binomial_pmf(200, 201) == 0.0);
}

TEST_CASE("normalized Binomial(20, 1/2) against Phi") {
  const auto B = standardized_binomial_cdf(20);
  std::vector<double> jumps;
  for (int k = 0; k <= 20; ++k) jumps.push_back((k - 10.0) / std::sqrt(5.0));
  const double ks = ks_distance(B, standard_normal(), with_left_limits(jumps));
  // Attained just left of z = 0: 1/2 - C(20,10)/2^21 against Phi(0).
  CHECK(std::abs(ks - 0.0880985260009765625) < 1e-12);
  CHECK_THROWS(ks_distance(B, standard_normal(), {}));
}

TEST_CASE("linspace endpoints") {
  const auto g = linspace(-1.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g[2] == 0.0);
  CHECK(g.back() == 1.0);
}

TEST_CASE("empirical cdf") {
  const auto F = EmpiricalCDF::from_samples({3.0, 1.0, 2.0, 2.0});
  CHECK(F.n_total() == 4);
  CHECK(F.distinct() == 3);
  CHECK(F.count_le(0.5) == 0);
  CHECK(F.count_le(2.0) == 3);
  CHECK(F(2.5) == 0.75);
  CHECK(F.mean() == 2.0);
  CHECK(F.variance() == doctest::Approx(0.5));

  const auto W = EmpiricalCDF::from_weighted({{2.0, 2}, {1.0, 1}, {3.0, 1}, {9.0, 0}});
  CHECK(W.values() == F.values());
  CHECK(W.count_at(1) == 2);

  // A single atom at 0 against Phi: both one-sided limits give 1/2.
  const auto atom = EmpiricalCDF::from_samples({0.0});
  CHECK(atom.ks_to(standard_normal()) == doctest::Approx(0.5));
}
