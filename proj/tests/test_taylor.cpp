#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/taylor.hpp"

using namespace semitoric;

namespace {
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("linear coefficients at s = 1/2") {
  const auto t = taylor_coeffs_numeric(0.5);
  const double r2 = std::sqrt(1.75);
  CHECK(rel(t.coeffs.coeff(1, 0), std::atan(1.5 / r2)) <= 1e-4);
  CHECK(t.coeffs.coeff(1, 0) == doctest::Approx(0.8481).epsilon(1e-4));
  CHECK(t.coeffs.coeff(0, 1) == doctest::Approx(3.612).epsilon(1e-4));
  CHECK(std::exp(t.coeffs.coeff(0, 1)) == doctest::Approx(37.04).epsilon(1e-3));
  CHECK(t.window_ok);
  CHECK(t.coeffs.coeff(0, 0) == 0.0);
}

TEST_CASE("numeric coefficients agree with the partial-derivative closed forms") {
  for (double s : {0.35, 0.5, 0.7}) {
    const auto num = taylor_coeffs_numeric(s);
    const auto cf = taylor_coeffs_closed(s, 1, TaylorForm::from_partials);
    CHECK(rel(num.coeffs.coeff(1, 0), cf.coeffs.coeff(1, 0)) <= 1e-4);
    CHECK(rel(num.coeffs.coeff(0, 1), cf.coeffs.coeff(0, 1)) <= 1e-4);
    for (auto [a, b] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 2}})
      CHECK(rel(num.coeffs.coeff(a, b), cf.coeffs.coeff(a, b)) <= 1e-2);
  }
}

TEST_CASE("printed and derived forms differ by four on the diagonal only") {
  for (double s : {0.35, 0.5, 0.7}) {
    const auto th = taylor_coeffs_closed(s, 1, TaylorForm::theorem);
    const auto dp = taylor_coeffs_closed(s, 1, TaylorForm::from_partials);
    CHECK(th.coeffs.coeff(2, 0) == doctest::Approx(4 * dp.coeffs.coeff(2, 0)));
    CHECK(th.coeffs.coeff(0, 2) == doctest::Approx(4 * dp.coeffs.coeff(0, 2)));
    CHECK(th.coeffs.coeff(1, 1) == dp.coeffs.coeff(1, 1));
    CHECK(th.coeffs.coeff(1, 0) == dp.coeffs.coeff(1, 0));
  }
}

TEST_CASE("quadratic diagonal vanishes at s = 2/3") {
  const auto t = taylor_coeffs_closed(2.0 / 3.0, 1);
  CHECK(std::abs(t.coeffs.coeff(2, 0)) <= 1e-14);
  CHECK(std::abs(taylor_coeffs_closed(0.5, 1).coeffs.coeff(0, 2)) > 1e-3);
  CHECK(std::abs(t.coeffs.coeff(1, 0)) <= 1e-15);
}

TEST_CASE("lj coefficient at s = 1/2") {
  const double s = 0.5, r1 = std::sqrt(0.5), r2 = std::sqrt(1.75);
  const double poly = 16 - 96 * s + 360 * s * s - 936 * std::pow(s, 3) + 2693 * std::pow(s, 4) - 6200 * std::pow(s, 5) +
                      8004 * std::pow(s, 6) - 5120 * std::pow(s, 7) + 1280 * std::pow(s, 8);
  CHECK(taylor_coeffs_closed(s, 1).coeffs.coeff(1, 1) ==
        doctest::Approx(r2 * poly / (16 * std::pow(r2, 3) * r1 * r1)).epsilon(1e-14));
}

TEST_CASE("second focus-focus point by symmetry") {
  for (double s : {0.35, 0.5, 0.7}) {
    const auto a = taylor_coeffs_closed(s, 1), b = taylor_coeffs_closed(s, 2);
    CHECK(b.ff_index == 2);
    CHECK(b.coeffs.coeff(1, 0) == doctest::Approx(a.coeffs.coeff(1, 0) + kPi));
    CHECK(b.coeffs.coeff(0, 1) == doctest::Approx(a.coeffs.coeff(0, 1)));
    for (auto [i, j] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 2}})
      CHECK(b.coeffs.coeff(i, j) == -a.coeffs.coeff(i, j));
    CHECK(b.window_ok);
  }
}

TEST_CASE("symmetry transform") {
  const auto a = taylor_coeffs_closed(0.5, 1);
  CHECK(symmetry_transform(a, 1, 1).coeffs.approx_equal(a.coeffs, 0.0));
  const auto twice = symmetry_transform(symmetry_transform(a, -1, -1), -1, -1);
  CHECK(twice.coeffs.approx_equal(a.coeffs, 1e-14));
  for (int e1 : {-1, 1})
    for (int e2 : {-1, 1}) {
      const auto t = symmetry_transform(symmetry_transform(a, e1, e2), e1, e2);
      const double d = t.coeffs.coeff(1, 0) - a.coeffs.coeff(1, 0);
      CHECK(std::abs(d / (2 * kPi) - std::round(d / (2 * kPi))) <= 1e-12);
      CHECK(t.window_ok);
    }
}

TEST_CASE("window normalization") {
  TaylorInvariant t;
  t.coeffs.set(1, 0, 0.8481);
  CHECK(normalize_representative(t).second == 0);
  t.coeffs.set(1, 0, 0.8481 + 2 * kPi);
  CHECK(normalize_representative(t).second == -1);
  t.coeffs.set(1, 0, -2.0);
  const auto [n, k] = normalize_representative(t);
  CHECK(k == 1);
  CHECK(n.coeffs.coeff(1, 0) == doctest::Approx(-2.0 + 2 * kPi));
  CHECK(n.window_ok);
}

TEST_CASE("property: window shift is unique") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const int k = window_shift(a);
    const double v = a + 2 * kPi * k;
    CHECK(v >= -kPi / 2);
    CHECK(v < 1.5 * kPi);
    CHECK_FALSE((v + 2 * kPi >= -kPi / 2 && v + 2 * kPi < 1.5 * kPi));
    CHECK_FALSE((v - 2 * kPi >= -kPi / 2 && v - 2 * kPi < 1.5 * kPi));
  }
}

TEST_CASE("l coefficient stays in the window across the focus-focus range") {
  for (int i = 1; i < 50; ++i) {
    const double s = s_minus() + (s_plus() - s_minus()) * i / 50.0;
    CHECK(taylor_coeffs_closed(s, 1).window_ok);
  }
}

TEST_CASE("property: partials are continuous across the vertical rays") {
  for (double j : {3e-3, -3e-3}) {
    for (double d : {1e-4}) {
      const auto a = dS_partials(0.5, -d, j), b = dS_partials(0.5, d, j);
      CHECK(std::abs(a.dS_dl - b.dS_dl) <= 1e-2);
      CHECK(std::abs(a.dS_dj - b.dS_dj) <= 1e-2);
    }
  }
  const auto a = dS_partials(0.5, -3e-3, 1e-5), b = dS_partials(0.5, -3e-3, -1e-5);
  CHECK(std::abs(a.dS_dl - b.dS_dl) <= 1e-2);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(taylor_coeffs_closed(0.1, 1), Error);
  CHECK_THROWS_AS(dS_partials(0.5, 0.0, 0.0), Error);
}
