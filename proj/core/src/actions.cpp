#include "semitoric/actions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <string>
#include <numbers>

#include "semitoric/elliptic.hpp"
#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_ff_value(double l, double h) { return std::abs(l) < 1e-14 && std::abs(h) < 1e-14; }

const CurveClass& require_curve(const ReducedLevel& level) {
  if (!level.curve) throw Error(ErrorCode::degenerate_level, "level is on or near a separatrix");
  return *level.curve;
}

}  // namespace

ActionValue action_I(double s, double l, double h) {
  const ReducedLevel level = quartic_roots(s, l, h);
  double cA;
  if (level.curve) {
    cA = level.curve->cA;
  } else if (is_ff_value(l, h)) {
    // C^A is continuous across the separatrix through the focus-focus value.
    cA = s < 2.0 / 3.0 ? level.sep.l_plus - level.sep.l_minus : level.roots[2] - level.sep.l_minus;
  } else {
    throw Error(ErrorCode::degenerate_level, "action_I: level within tau_type of a separatrix");
  }
  const double z2 = level.roots[1], z3 = level.roots[2];
  const double shift = h + (1.0 - 2.0 * s);
  auto f = [&](double p) {
    const double b = reduced_B(s, l, p);
    const double num = shift - reduced_A(s, l, p);
    if (b <= 0.0) return num >= 0.0 ? 0.0 : kPi;
    double x = num / std::sqrt(b);
    x = std::clamp(x, -1.0, 1.0);
    return std::acos(x);
  };
  ActionValue out;
  out.route = ActionRoute::quadrature;
  if (z3 - z2 <= 0.0) {
    out.value = cA;
    return out;
  }
  boost::math::quadrature::tanh_sinh<double> integrator(12);
  double err = 0.0, l1 = 0.0;
  double val;
  try {
    val = integrator.integrate(f, z2, z3, 1e-13, &err, &l1);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::numerical, std::string("action_I quadrature failed: ") + e.what());
  }
  out.value = cA - val / kPi;
  out.est_error = err * l1 / kPi;
  if (out.est_error > 1e-8) throw Error(ErrorCode::numerical, "action_I quadrature did not converge");
  return out;
}

BasicIntegrals basic_integrals(const ReducedLevel& level) {
  const auto& z = level.roots;
  const double a = z[3], b = z[2], c = z[1], d = z[0];
  if (!(c - d > 0.0)) throw Error(ErrorCode::degenerate_level, "vanishing cycle collapsed");
  const double g = 2.0 / std::sqrt((a - c) * (b - d));
  const double pre = g / std::sqrt(level.lead);
  const double K = ellip_K(level.k2);
  BasicIntegrals out;
  out.NA = pre * K;
  auto nb = [&](double eta, double n) {
    if (n >= 1.0) throw Error(ErrorCode::separatrix_pole, "pole on the real cycle");
    return pre * (K / (d - eta) + (d - c) / ((c - eta) * (d - eta)) * ellip_Pi(n, level.k2));
  };
  out.NB_l = nb(level.l, level.n_l);
  out.NB_4 = nb(4.0, level.n_4);
  out.NB_2l = nb(2.0 + level.l, level.n_2l);
  return out;
}

double cycle_integral(const ReducedLevel& level, const std::function<double(double)>& f) {
  const auto& z = level.roots;
  const double a = z[3], b = z[2], c = z[1], d = z[0];
  auto g = [&](double th) {
    const double sn = std::sin(th);
    const double p = c + (b - c) * sn * sn;
    return f(p) * 2.0 / std::sqrt(level.lead * (p - d) * (a - p));
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, kPi / 2.0, 15, 1e-14, &err);
  return v;
}

double period_T(const ReducedLevel& level) {
  require_curve(level);
  return 2.0 * basic_integrals(level).NA;
}

double period_T(double s, double l, double h) { return period_T(quartic_roots(s, l, h)); }

double rotation_W(const ReducedLevel& level) {
  const CurveClass& cc = require_curve(level);
  const auto n = basic_integrals(level);
  const double s = level.s, h = level.h;
  return cc.cC + (s / 2.0 * n.NA - (h - level.sep.hl) / 2.0 * n.NB_l - (h - level.sep.h2l) / 2.0 * n.NB_2l) / kPi;
}

double rotation_W(double s, double l, double h) { return rotation_W(quartic_roots(s, l, h)); }

double R_I(double s, double l, double h, double p) {
  const auto d = separatrix_levels(s, l);
  return (d.h0 + d.hl - d.h4 - d.h2l) / 6.0 * p + (4.0 * h - d.h0 - d.hl - d.h4 - d.h2l) / 2.0 +
         l / 2.0 * (h - d.hl) / (p - l) + 2.0 * (h - d.h4) / (p - 4.0) + (2.0 + l) / 2.0 * (h - d.h2l) / (p - 2.0 - l);
}

double R_W(double s, double l, double h, double p) {
  const auto d = separatrix_levels(s, l);
  return s / 2.0 - 0.5 * (h - d.hl) / (p - l) - 0.5 * (h - d.h2l) / (p - 2.0 - l);
}

ActionValue action_I_elliptic(double s, double l, double h) {
  const ReducedLevel level = quartic_roots(s, l, h);
  const CurveClass& cc = require_curve(level);
  ActionValue out;
  out.route = ActionRoute::elliptic;
  out.value = cc.cB + cycle_integral(level, [&](double p) { return R_I(s, l, h, p); }) / kPi;
  return out;
}

}  // namespace semitoric
