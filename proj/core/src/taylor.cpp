#include "semitoric/taylor.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/vanishing.hpp"

namespace semitoric {

namespace {

constexpr double kPi = std::numbers::pi;

double polyval(std::initializer_list<double> hi_first, double x) {
  double acc = 0.0;
  for (double c : hi_first) acc = acc * x + c;
  return acc;
}

bool in_window(double a) { return a >= -kPi / 2.0 && a < 1.5 * kPi; }

// Neville extrapolation to r = 0 of values at radii r[i].
double extrapolate_zero(const std::array<double, 3>& r, std::array<double, 3> v) {
  for (int m = 1; m < 3; ++m)
    for (int i = 0; i + m < 3; ++i) v[i] = (r[i] * v[i + 1] - r[i + m] * v[i]) / (r[i] - r[i + m]);
  return v[0];
}

}  // namespace

SPartials dS_partials(double s, double l, double j) {
  const auto p = params(s);
  if (!p.has_ff) throw Error(ErrorCode::domain, "s outside the focus-focus window");
  if (l == 0.0 && j == 0.0) throw Error(ErrorCode::domain, "dS_partials undefined at the focus-focus value");
  const double h = birkhoff_Z_exact(s, l, j);
  const ReducedLevel level = quartic_roots(s, l, h);
  const double T = period_T(level);
  const double W = rotation_W(level);
  const auto c = vanishing_contour(s, l, h);
  double a = std::atan2(j, l);
  if (a > kPi / 2.0) a -= 2.0 * kPi;
  SPartials out;
  out.dS_dl = 2.0 * kPi * (c.W_alpha * T / c.T_alpha - W) + a;
  out.dS_dj = 2.0 * kPi * T / c.T_alpha + std::log(std::hypot(l, j));
  return out;
}

TaylorInvariant taylor_coeffs_numeric(double s, double stencil) {
  const std::array<double, 3> radii{1e-2, 5e-3, 2.5e-3};
  std::array<double, 3> al{}, aj{};
  for (int i = 0; i < 3; ++i) {
    const double r = radii[i];
    const SPartials rays[4] = {dS_partials(s, r, 0.0), dS_partials(s, -r, 0.0), dS_partials(s, 0.0, r),
                               dS_partials(s, 0.0, -r)};
    for (const auto& d : rays) {
      al[i] += d.dS_dl / 4.0;
      aj[i] += d.dS_dj / 4.0;
    }
  }
  const double cl = extrapolate_zero(radii, al);
  const double cj = extrapolate_zero(radii, aj);

  const double d = stencil;
  auto d5 = [d](double fm2, double fm1, double f1, double f2) { return (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * d); };
  const SPartials l2m = dS_partials(s, -2 * d, 0), l1m = dS_partials(s, -d, 0), l1 = dS_partials(s, d, 0),
                  l2 = dS_partials(s, 2 * d, 0);
  const SPartials j2m = dS_partials(s, 0, -2 * d), j1m = dS_partials(s, 0, -d), j1 = dS_partials(s, 0, d),
                  j2 = dS_partials(s, 0, 2 * d);
  const double ll = 0.5 * d5(l2m.dS_dl, l1m.dS_dl, l1.dS_dl, l2.dS_dl);
  const double jj = 0.5 * d5(j2m.dS_dj, j1m.dS_dj, j1.dS_dj, j2.dS_dj);
  const double lj = 0.5 * (d5(j2m.dS_dl, j1m.dS_dl, j1.dS_dl, j2.dS_dl) + d5(l2m.dS_dj, l1m.dS_dj, l1.dS_dj, l2.dS_dj));

  TaylorInvariant out;
  out.ff_index = 1;
  out.coeffs.set(1, 0, cl);
  out.coeffs.set(0, 1, cj);
  out.coeffs.set(2, 0, ll);
  out.coeffs.set(1, 1, lj);
  out.coeffs.set(0, 2, jj);
  out.window_ok = in_window(cl);
  return out;
}

TaylorInvariant taylor_coeffs_closed(double s, int ff_index, TaylorForm form) {
  const auto p = params(s);
  if (!p.has_ff) throw Error(ErrorCode::domain, "s outside the focus-focus window");
  if (ff_index != 1 && ff_index != 2) throw Error(ErrorCode::domain, "ff_index must be 1 or 2");
  const double r1 = p.rho1, r2 = *p.rho2;
  const double D = r2 * r2 * r2 * r1 * r1;
  const double diag = form == TaylorForm::theorem ? 8.0 : 32.0;
  const double Pl = polyval({704, -2816, 3252, 424, -3211, 1944, -216, -96, 16}, s);
  const double Q = polyval({1280, -5120, 8004, -6200, 2693, -936, 360, -96, 16}, s);
  const double R = polyval({17856, -83328, 171924, -211536, 174957, -99558, 36312, -7248, 720, -96}, s);
  TaylorInvariant t;
  t.ff_index = 1;
  t.coeffs.set(1, 0, std::atan((6.0 - 9.0 * s) / r2));
  t.coeffs.set(0, 1, std::log(r2 * r2 * r2 / (std::sqrt(2.0) * r1 * (1.0 - s) * (1.0 - s) * s * s)));
  t.coeffs.set(2, 0, 3.0 * (2.0 - 3.0 * s) * Pl / (diag * D));
  t.coeffs.set(1, 1, r2 * Q / (16.0 * D));
  t.coeffs.set(0, 2, R / (diag * D));
  t.window_ok = in_window(t.coeffs.coeff(1, 0));
  if (ff_index == 1) return t;
  TaylorInvariant t2 = symmetry_transform(t, -1, -1);
  t2.ff_index = 2;
  return t2;
}

int window_shift(double a) {
  int k = static_cast<int>(std::ceil((-kPi / 2.0 - a) / (2.0 * kPi)));
  // guard the rounding at the window edges
  while (a + 2.0 * kPi * k < -kPi / 2.0) ++k;
  while (a + 2.0 * kPi * k >= 1.5 * kPi) --k;
  return k;
}

std::pair<TaylorInvariant, int> normalize_representative(const TaylorInvariant& t) {
  TaylorInvariant out = t;
  const int k = window_shift(t.coeffs.coeff(1, 0));
  out.coeffs.set(1, 0, t.coeffs.coeff(1, 0) + 2.0 * kPi * k);
  out.window_ok = true;
  return {out, k};
}

TaylorInvariant symmetry_transform(const TaylorInvariant& t, int eps1, int eps2) {
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw Error(ErrorCode::domain, "symmetry signs must be +1 or -1");
  TaylorInvariant out;
  out.ff_index = t.ff_index;
  out.coeffs = BivariateSeries(t.coeffs.max_degree());
  for (const auto& [key, v] : t.coeffs.terms()) {
    const double sign = eps2 * std::pow(eps1, key.first) * std::pow(eps2, key.second);
    out.coeffs.set(key.first, key.second, sign * v);
  }
  out.coeffs.add_to(1, 0, (1 - eps1) / 2 * kPi);
  return normalize_representative(out).first;
}

}  // namespace semitoric
