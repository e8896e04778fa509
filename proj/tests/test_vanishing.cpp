#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/vanishing.hpp"

using namespace semitoric;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("J vanishes at the focus-focus value") {
  CHECK(std::abs(imaginary_action_J(0.5, 0.0, 0.0)) <= 1e-12);
}

TEST_CASE("dJ/dh at the focus-focus value") {
  const double r2 = *params(0.5).rho2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double h : {-1e-3, -5e-4, 5e-4, 1e-3}) {
    const double J = imaginary_action_J(0.5, 0.0, h);
    sx += h;
    sy += J;
    sxx += h * h;
    sxy += h * J;
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  CHECK(slope == doctest::Approx(4 / r2).epsilon(1e-4));
  CHECK(4 / r2 == doctest::Approx(3.0237).epsilon(1e-4));
}

TEST_CASE("contour and series agree near the focus-focus value") {
  const double c = imaginary_action_J(0.5, 0.01, 0.02, JRoute::contour);
  const double s = imaginary_action_J(0.5, 0.01, 0.02, JRoute::series);
  CHECK(std::abs(c - s) <= 1e-3 * std::abs(c));
}

TEST_CASE("imaginary period and rotation against derivatives of J") {
  const double s = 0.5;
  for (int i = -2; i <= 2; ++i) {
    for (int k = -2; k <= 2; ++k) {
      const double l = 0.01 * i, h = 0.01 * k;
      const auto r = imaginary_period_rotation(s, l, h);
      CHECK(r.T_alpha > 0.0);
      const double dJh = oracle::derivative([&](double x) { return imaginary_action_J(s, l, x); }, h, 1e-3);
      const double dJl = oracle::derivative([&](double x) { return imaginary_action_J(s, x, h); }, l, 1e-3);
      CHECK(std::abs(r.T_alpha - 2 * kPi * dJh) <= 1e-6 * r.T_alpha);
      CHECK(std::abs(r.W_alpha + dJl) <= 1e-6);
      CHECK(dJh > 0.0);
    }
  }
}

TEST_CASE("W^alpha at the focus-focus value") {
  const double r2 = *params(0.5).rho2;
  CHECK(imaginary_period_rotation(0.5, 0.0, 0.0).W_alpha == doctest::Approx(1.5 / r2).epsilon(1e-9));
}

TEST_CASE("contour is stable under radius perturbation and node doubling") {
  for (auto [l, h] : {std::pair{0.01, 0.02}, std::pair{-0.02, 0.01}, std::pair{0.03, -0.01}}) {
    const auto base = vanishing_contour(0.5, l, h, 0.5);
    for (double f : {0.45, 0.55}) {
      const auto r = vanishing_contour(0.5, l, h, f);
      CHECK(std::abs(r.J - base.J) <= 1e-10);
      CHECK(std::abs(r.T_alpha - base.T_alpha) <= 1e-10 * base.T_alpha);
      CHECK(std::abs(r.W_alpha - base.W_alpha) <= 1e-10);
    }
    CHECK(base.spec.nodes <= 8192);
  }
}

TEST_CASE("Birkhoff form") {
  const double s = 0.5, r2 = *params(s).rho2;
  const auto Z = birkhoff_Z(s);
  CHECK(Z.coeff(0, 1) == doctest::Approx(r2 / 4).epsilon(1e-14));
  CHECK(Z.coeff(1, 0) == doctest::Approx(1.5 / 4).epsilon(1e-14));
  for (double t : {0.3, 0.5, 0.7, 0.8}) {
    const auto z = birkhoff_Z(t), zc = birkhoff_Z_closed(t);
    CHECK((z - zc).max_abs_coeff() <= 1e-12);
    CHECK((compose_second(j_series(t), z) - BivariateSeries::second(2)).max_abs_coeff() <= 1e-12);
  }
  const double h = series_eval(Z, 0.01, 0.01);
  CHECK(std::abs(imaginary_action_J(s, 0.01, h) - 0.01) <= 5e-5);
}

TEST_CASE("the printed J prefactor does not reproduce the Birkhoff form") {
  const auto z = birkhoff_Z(0.5, 2, JSeriesVariant::printed);
  CHECK((z - birkhoff_Z_closed(0.5)).max_abs_coeff() > 1e-3);
}

TEST_CASE("Newton-inverted Birkhoff form") {
  const double h = birkhoff_Z_exact(0.5, 0.02, -0.01);
  CHECK(std::abs(imaginary_action_J(0.5, 0.02, h) + 0.01) <= 1e-12);
}

TEST_CASE("errors") {
  try {
    birkhoff_Z(0.5, 3);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
  CHECK_THROWS_AS(j_series(0.1), Error);
  CHECK_THROWS_AS(vanishing_contour(0.95, 0.0, 0.0), Error);
}
