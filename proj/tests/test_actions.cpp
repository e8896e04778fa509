#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/polygons.hpp"

using namespace semitoric;

namespace {

struct Level {
  double s, l, h;
};

// Points covering the three curve types at each s, away from separatrices.
std::vector<Level> regular_levels() {
  std::vector<Level> out;
  for (double s : {0.35, 0.5, 0.7}) {
    for (double l : {-0.6, 0.4, 1.3, 2.6}) {
      const auto [hmin, hmax] = oracle::h_range(s, l);
      const auto sep = separatrix_levels(s, l);
      const double a = std::min(sep.h_lminus(), sep.h_lplus()), b = std::max(sep.h_lminus(), sep.h_lplus());
      const double cand[] = {0.5 * (hmin + a), 0.5 * (a + b), 0.5 * (b + hmax)};
      for (double h : cand) {
        if (h <= hmin + 1e-3 || h >= hmax - 1e-3) continue;
        if (std::abs(h - a) < 1e-3 || std::abs(h - b) < 1e-3) continue;
        out.push_back({s, l, h});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("action at the bottom and top of a slice") {
  const auto [hmin, hmax] = oracle::h_range(0.5, 0.0);
  CHECK(action_I(0.5, 0.0, hmin + 1e-10).value == doctest::Approx(0.0).scale(1.0).epsilon(1e-4));
  CHECK(action_I(0.5, 0.0, hmax - 1e-10).value == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("action at the focus-focus value equals the sublevel area") {
  const double I = action_I(0.5, 0.0, 0.0).value;
  CHECK(I == doctest::Approx(oracle::area_action(0.5, 0.0, 0.0)).epsilon(1e-9));
  CHECK(I == doctest::Approx(1.51577947).epsilon(1e-8));
}

TEST_CASE("action agrees with the sublevel area across types") {
  for (const auto& lv : regular_levels()) {
    CHECK(action_I(lv.s, lv.l, lv.h).value == doctest::Approx(oracle::area_action(lv.s, lv.l, lv.h)).epsilon(1e-9));
  }
}

TEST_CASE("elliptic route for I agrees with the arccos route") {
  for (const auto& lv : regular_levels()) {
    CHECK(action_I_elliptic(lv.s, lv.l, lv.h).value ==
          doctest::Approx(action_I(lv.s, lv.l, lv.h).value).epsilon(1e-9));
  }
}

TEST_CASE("basic integrals against direct quadrature") {
  const auto lv = quartic_roots(0.5, 0.0, 0.15);
  const auto n = basic_integrals(lv);
  const auto& z = lv.roots;
  // Gauss-Kronrod on the raw integrand after p = z2 + (z3 - z2) sin^2 t; its nodes avoid the endpoints
  auto direct = [&](double eta, bool pole) {
    auto f = [&](double t) {
      // extended precision keeps P accurate near the turning points
      using LD = long double;
      const LD st = std::sin(LD(t)), ct = std::cos(LD(t));
      const LD p = z[1] + (LD(z[2]) - z[1]) * st * st;
      const LD P = oracle::P<LD>(0.5L, 0.0L, LD(0.15), p);
      const LD w = 2 * (LD(z[2]) - z[1]) * st * ct / std::sqrt(std::max(P, LD(1e-300)));
      return static_cast<double>(pole ? w / (p - eta) : w);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi / 2, 10, 1e-12);
  };
  CHECK(n.NA == doctest::Approx(direct(0, false)).epsilon(1e-9));
  CHECK(n.NB_4 == doctest::Approx(direct(4.0, true)).epsilon(1e-9));
  CHECK(n.NB_2l == doctest::Approx(direct(2.0, true)).epsilon(1e-9));
  CHECK(n.NB_l == doctest::Approx(direct(0.0, true)).epsilon(1e-9));
  CHECK(lv.roots[2] < 4.0);
  CHECK(lv.n_4 < 1.0);
  CHECK(n.NB_4 < 0.0);  // 1/(p-4) is negative on the cycle
}

TEST_CASE("period and rotation against derivatives of the action") {
  int checked = 0;
  for (const auto& lv : regular_levels()) {
    const double T = period_T(lv.s, lv.l, lv.h);
    const double W = rotation_W(lv.s, lv.l, lv.h);
    CHECK(T > 0.0);
    const double dIh = oracle::derivative([&](double h) { return action_I(lv.s, lv.l, h).value; }, lv.h, 1e-3);
    const double dIl = oracle::derivative([&](double l) { return action_I(lv.s, l, lv.h).value; }, lv.l, 1e-3);
    CHECK(std::abs(2 * std::numbers::pi * dIh - T) / T <= 1e-6);
    CHECK(std::abs(-dIl - W) <= 1e-5);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("rotation number examples") {
  // deep type III at s < 2/3 carries no C^C
  CHECK(classify_curve(0.5, 0.3, -0.7).cC == 0.0);
  const double W = rotation_W(0.5, 0.3, 0.2);
  const double fd = -oracle::derivative([](double l) { return action_I(0.5, l, 0.2).value; }, 0.3, 1e-3);
  CHECK(std::abs(W - fd) <= 1e-5);
  CHECK(classify_curve(0.5, -0.5, -0.2).cC == -1.0);
}

TEST_CASE("period diverges at the focus-focus value") {
  double prev = 0.0;
  for (int k = 2; k <= 8; ++k) {
    const double T = period_T(0.5, 0.0, std::pow(10.0, -k));
    CHECK(T > prev);
    prev = T;
  }
  CHECK_THROWS_AS(period_T(0.5, 0.0, 0.0), Error);
  CHECK_THROWS_AS(rotation_W(0.5, 0.0, 0.0), Error);
}

TEST_CASE("property: I strictly increasing in h") {
  for (double s : {0.35, 0.5, 0.7}) {
    for (double l : {-0.7, 0.5, 2.4}) {
      const auto [hmin, hmax] = oracle::h_range(s, l);
      double prev = -1.0;
      for (int i = 1; i < 100; ++i) {
        const double h = hmin + (hmax - hmin) * i / 100.0;
        double v;
        try {
          v = action_I(s, l, h).value;
        } catch (const Error&) {
          continue;  // within tau_type of a separatrix
        }
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("property: action range equals the polygon slice") {
  const auto poly = system_polygon(0.5, PolygonRep::up_up);
  for (double s : {0.35, 0.5, 0.7}) {
    for (double l : {-1.5, -0.7, 0.5, 1.2, 2.4, 3.5}) {
      const auto [hmin, hmax] = oracle::h_range(s, l);
      const double gap = action_I(s, l, hmax - 1e-12).value - action_I(s, l, hmin + 1e-12).value;
      const auto [ylo, yhi] = vertical_slice(poly, l - 1.0);
      CHECK(std::abs(gap - (yhi - ylo)) <= 1e-6);
    }
  }
}
