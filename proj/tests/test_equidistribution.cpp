#include <doctest.h>

#include "reldens/equidistribution.hpp"
#include "reldens/independence.hpp"

#include <cmath>

using namespace reldens;

namespace {

std::vector<double> kronecker_points(Frequency a, std::uint64_t n) {
  std::vector<double> pts;
  for (std::uint64_t k = 1; k <= n; ++k) pts.push_back(a.phase(k));
  return pts;
}

}  // namespace

TEST_CASE("weyl sums") {
  const std::vector<RealSeq> half{kronecker(Frequency(0.5))};
  for (std::uint64_t n : {1, 7, 1000}) {
    const std::vector<std::int64_t> h{2};
    CHECK(weyl_sum(half, h, n).magnitude == 1.0);
  }
  const std::vector<RealSeq> third{kronecker(parse_frequency("1/3"))};
  const std::vector<std::int64_t> h3{3};
  CHECK(weyl_sum(third, h3, 999).magnitude == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<RealSeq> golden{kronecker(Frequency::golden_ratio())};
  const std::vector<std::int64_t> h1{1};
  const auto g = weyl_sum(golden, h1, 1000000);
  CHECK(g.magnitude <= 3e-6);
  CHECK(g.trace.back().first == 1000000);

  const std::vector<RealSeq> pair{kronecker(Frequency::sqrt_of(2)), kronecker(Frequency::sqrt_of(3))};
  const std::vector<std::int64_t> hm{1, -1};
  CHECK(weyl_sum(pair, hm, 1000000).magnitude <= 1e-5);

  const std::vector<std::int64_t> zero{0, 0};
  CHECK_THROWS_WITH(weyl_sum(pair, zero, 10), "trivial character");
  CHECK_THROWS(weyl_sum(pair, h1, 10));
}

TEST_CASE("star discrepancy") {
  CHECK(star_discrepancy_1d({0.5}) == 0.5);
  std::vector<double> centred;
  for (int k = 0; k < 10; ++k) centred.push_back((k + 0.5) / 10.0);
  CHECK(star_discrepancy_1d(centred) == doctest::Approx(0.05));

  auto pts = kronecker_points(Frequency::golden_ratio(), 100000);
  const double d = star_discrepancy_1d(pts);
  CHECK(d <= 2e-4);
  std::vector<double> reversed(pts.rbegin(), pts.rend());
  CHECK(star_discrepancy_1d(reversed) == d);
  std::vector<double> doubled = pts;
  doubled.insert(doubled.end(), pts.begin(), pts.end());
  CHECK(star_discrepancy_1d(doubled) == doctest::Approx(d).epsilon(1e-12));

  CHECK_THROWS(star_discrepancy_1d({1.0}));
  CHECK_THROWS(star_discrepancy_1d({}));
}

TEST_CASE("kronecker discrepancy envelope") {
  for (auto a : {Frequency::golden_ratio(), Frequency::sqrt_of(2), Frequency::sqrt_of(3)})
    for (std::uint64_t n : {1000, 10000, 100000, 1000000}) {
      const double N = static_cast<double>(n);
      CHECK(star_discrepancy_1d(kronecker_points(a, n)) <= 5.0 * std::log(N) / N);
    }
}

TEST_CASE("equidistribution integrals") {
  const std::vector<RealSeq> pair{kronecker(Frequency::sqrt_of(2)), kronecker(Frequency::sqrt_of(3))};
  CHECK(qmc_integrate([](std::span<const double>) { return 1.0; }, pair, 1000).estimate == 1.0);
  const auto uv = qmc_integrate([](std::span<const double> u) { return u[0] * u[1]; }, pair, 1000000);
  CHECK(std::abs(uv.estimate - 0.25) < 1e-3);

  const std::vector<RealSeq> golden{kronecker(Frequency::golden_ratio())};
  const auto c = qmc_integrate([](std::span<const double> u) { return std::cos(kTwoPi * u[0]); }, golden, 1000000);
  CHECK(std::abs(c.estimate) < 1e-5);
  const std::vector<std::int64_t> h1{1};
  CHECK(std::abs(c.estimate - weyl_sum(golden, h1, 1000000).mean.real()) < 1e-12);

  // Koksma: |error| <= D*_N V(psi); the test allows a factor 10.
  const std::uint64_t n = 100000;
  const double dstar = star_discrepancy_1d(kronecker_points(Frequency::golden_ratio(), n));
  struct Poly {
    std::function<double(double)> f;
    double integral, variation;
  };
  const std::vector<Poly> polys{{[](double u) { return u; }, 0.5, 1.0},
                                {[](double u) { return u * u; }, 1.0 / 3.0, 1.0},
                                {[](double u) { return u * u * u - u; }, -0.25, 4.0 / (3.0 * std::sqrt(3.0))},
                                {[](double u) { return 4 * u * u * u - 6 * u * u + 2 * u; }, 0.0, 4.0 * std::sqrt(3.0) / 9.0}};
  for (const auto& p : polys) {
    const auto r = qmc_integrate([&](std::span<const double> u) { return p.f(u[0]); }, golden, n);
    CHECK(std::abs(r.estimate - p.integral) <= 10.0 * dstar * p.variation);
  }
}

TEST_CASE("monotone piece maps") {
  const std::vector<RealSeq> x{kronecker(Frequency::sqrt_of(2))};
  const std::vector<MonotonePieceMap> cosine{MonotonePieceMap::cosine()};
  const auto mapped = map_independent(x, cosine);
  REQUIRE(mapped.size() == 1);
  CHECK(mapped[0].pieces == 2);
  const auto direct = cosine_sequence(Frequency::sqrt_of(2));
  for (std::uint64_t n : {1, 2, 1000, 123456789}) CHECK(mapped[0].seq(n) == direct(n));

  const std::vector<MonotonePieceMap> id{MonotonePieceMap::identity()};
  const auto same = map_independent(x, id);
  for (std::uint64_t n : {1, 77, 99999}) CHECK(same[0].seq(n) == x[0](n));

  const std::vector<RealSeq> g{kronecker(Frequency::golden_ratio())};
  const std::vector<MonotonePieceMap> cut{MonotonePieceMap::threshold()};
  const auto bits = map_independent(g, cut);
  double ones = 0.0;
  for (std::uint64_t n = 1; n <= 100000; ++n) ones += bits[0].seq(n);
  CHECK(std::abs(ones / 100000 - 0.5) <= 2e-4);

  MonotonePieceMap wrong = MonotonePieceMap::cosine();
  wrong.directions = {1, 1};
  const std::vector<MonotonePieceMap> bad{wrong};
  CHECK_THROWS(map_independent(x, bad));
  MonotonePieceMap gap = MonotonePieceMap::identity();
  gap.breakpoints = {0.0, 0.9};
  const std::vector<MonotonePieceMap> bad2{gap};
  CHECK_THROWS(map_independent(x, bad2));
}

TEST_CASE("independence survives monotone maps") {
  const std::vector<RealSeq> x{kronecker(Frequency::sqrt_of(2)), kronecker(Frequency::sqrt_of(3))};
  const std::vector<MonotonePieceMap> maps{MonotonePieceMap::cosine(), MonotonePieceMap::cosine()};
  const auto mapped = map_independent(x, maps);
  const std::vector<RealSeq> seqs{mapped[0].seq, mapped[1].seq};
  const double q = std::sqrt(0.5);
  const std::vector<Interval> quartiles{{-1.0, -q}, {-q, 0.0, false, true}, {0.0, q, false, true}, {q, 1.0, false, true}};
  const std::vector<std::vector<Interval>> grids{quartiles, quartiles};
  CHECK(sequence_independence_defect(seqs, grids, 1000000).max_defect <= 0.01);
}
