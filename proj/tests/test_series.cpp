#include <cmath>
#include <random>

#include "doctest.h"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/series.hpp"

using namespace semitoric;

namespace {

BivariateSeries random_series(std::mt19937& rng, int deg, bool zero_const = true) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  BivariateSeries f(deg);
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      if (!(zero_const && a == 0 && b == 0)) f.set(a, b, u(rng));
  return f;
}

}  // namespace

TEST_CASE("product of sums truncates to the difference of squares") {
  const auto l = BivariateSeries::first(2), j = BivariateSeries::second(2);
  const auto p = series_arithmetic(l + j, l - j, SeriesOp::mul);
  CHECK(p.coeff(2, 0) == 1.0);
  CHECK(p.coeff(0, 2) == -1.0);
  CHECK(p.coeff(1, 1) == 0.0);
  CHECK(p.terms().size() == 2);
}

TEST_CASE("adding zero is the identity") {
  BivariateSeries a(2);
  a.set(1, 0, 0.3);
  a.set(1, 1, -2.0);
  CHECK(series_arithmetic(a, BivariateSeries(2), SeriesOp::add).approx_equal(a, 0.0));
}

TEST_CASE("degree four products vanish at degree two") {
  BivariateSeries lj(2);
  lj.set(1, 1, 1.0);
  CHECK(series_arithmetic(lj, lj, SeriesOp::mul).terms().empty());
}

TEST_CASE("absent coefficients read as zero and storage respects max_degree") {
  BivariateSeries f(2);
  CHECK(f.coeff(1, 1) == 0.0);
  CHECK(f.coeff(5, 5) == 0.0);
  CHECK_THROWS_AS(f.set(2, 1, 1.0), Error);
}

TEST_CASE("mismatched degrees are a contract violation") {
  try {
    series_arithmetic(BivariateSeries(2), BivariateSeries(3), SeriesOp::add);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::contract);
  }
}

TEST_CASE("evaluation examples") {
  const auto l = BivariateSeries::first(2), j = BivariateSeries::second(2);
  CHECK(series_eval(l * l - j * j, 1.0, 1.0) == doctest::Approx(0.0));
  CHECK(series_eval(BivariateSeries(2), 0.7, -3.0) == 0.0);
  BivariateSeries f(2);
  f.set(1, 1, 3.0);
  CHECK(series_eval(f, 2.0, 0.5) == doctest::Approx(3.0));
}

TEST_CASE("inversion of linear and quadratic examples") {
  SUBCASE("j = 2h") {
    BivariateSeries f(2);
    f.set(0, 1, 2.0);
    const auto g = series_invert_second(f);
    CHECK(g.coeff(0, 1) == doctest::Approx(0.5));
    CHECK(g.terms().size() == 1);
  }
  SUBCASE("linear part of J at s = 1/2") {
    const double s = 0.5, r2 = *params(s).rho2;
    BivariateSeries f(2);
    f.set(1, 0, -(2 - s) / r2);
    f.set(0, 1, 4 / r2);
    const auto g = series_invert_second(f);
    CHECK(g.coeff(0, 1) == doctest::Approx(r2 / 4).epsilon(1e-14));
    CHECK(g.coeff(1, 0) == doctest::Approx((2 - s) / 4).epsilon(1e-14));
  }
  SUBCASE("j = h + h^2") {
    BivariateSeries f(2);
    f.set(0, 1, 1.0);
    f.set(0, 2, 1.0);
    const auto g = series_invert_second(f);
    CHECK(g.coeff(0, 1) == doctest::Approx(1.0));
    CHECK(g.coeff(0, 2) == doctest::Approx(-1.0));
    const auto id = compose_second(f, g);
    CHECK(id.approx_equal(BivariateSeries::second(2), 1e-12));
  }
  SUBCASE("zero h coefficient") {
    BivariateSeries f(2);
    f.set(1, 0, 1.0);
    f.set(0, 2, 1.0);
    try {
      series_invert_second(f);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::non_invertible);
    }
  }
}

TEST_CASE("property: inversion is a right inverse") {
  std::mt19937 rng(7);
  for (int deg = 1; deg <= 4; ++deg) {
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_series(rng, deg);
      f.set(0, 1, 0.5 + std::abs(f.coeff(0, 1)));
      const auto g = series_invert_second(f);
      const auto id = compose_second(f, g);
      CHECK((id - BivariateSeries::second(deg)).max_abs_coeff() <= 1e-12);
    }
  }
}

TEST_CASE("property: evaluation equals term-by-term summation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = trial % 5;
    const auto f = random_series(rng, deg, false);
    const double x = u(rng), y = u(rng);
    double direct = 0.0;
    for (const auto& [k, c] : f.terms()) direct += c * std::pow(x, k.first) * std::pow(y, k.second);
    CHECK(series_eval(f, x, y) == doctest::Approx(direct).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("property: commutativity and associativity at fixed truncation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int deg = 1 + trial % 4;
    const auto a = random_series(rng, deg, false), b = random_series(rng, deg, false),
               c = random_series(rng, deg, false);
    CHECK((a * b).approx_equal(b * a, 1e-13));
    CHECK((a + b).approx_equal(b + a, 0.0));
    CHECK(((a * b) * c).approx_equal(a * (b * c), 1e-12));
    CHECK(((a + b) + c).approx_equal(a + (b + c), 1e-14));
  }
}
