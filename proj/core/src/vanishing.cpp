#include "semitoric/vanishing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/reduced.hpp"

namespace semitoric {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct KahanC {
  cplx sum{0.0, 0.0};
  cplx comp{0.0, 0.0};
  void add(cplx v) {
    const cplx y = v - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double rho2_of(double s) {
  const auto p = params(s);
  if (!p.has_ff) throw Error(ErrorCode::domain, "s outside the focus-focus window");
  return *p.rho2;
}

cplx eval_poly(const std::array<double, 5>& c, cplx p) {
  return (((c[4] * p + c[3]) * p + c[2]) * p + c[1]) * p + c[0];
}

struct Sums {
  cplx J, T, W;
};

Sums trapezoid(double s, double l, double h, const std::array<double, 5>& c, const ContourSpec& spec) {
  const auto sep = separatrix_levels(s, l);
  const double kI1 = (sep.h0 + sep.hl - sep.h4 - sep.h2l) / 6.0;
  const double kI0 = (4.0 * h - sep.h0 - sep.hl - sep.h4 - sep.h2l) / 2.0;
  const int n = spec.nodes;
  KahanC sj, st, sw;
  cplx prev;
  cplx first;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    const cplx e(std::cos(th), std::sin(th));
    const cplx p = spec.center + spec.radius * e;
    cplx sq = std::sqrt(eval_poly(c, p));
    if (k == 0) {
      first = sq;
    } else if (std::abs(sq - prev) > std::abs(sq + prev)) {
      sq = -sq;
    }
    prev = sq;
    const cplx dp = cplx(0.0, 1.0) * spec.radius * e * (2.0 * kPi / n);
    const cplx ri = kI1 * p + kI0 + l / 2.0 * (h - sep.hl) / (p - l) + 2.0 * (h - sep.h4) / (p - 4.0) +
                    (2.0 + l) / 2.0 * (h - sep.h2l) / (p - 2.0 - l);
    const cplx rw = s / 2.0 - 0.5 * (h - sep.hl) / (p - l) - 0.5 * (h - sep.h2l) / (p - 2.0 - l);
    sj.add(ri / sq * dp);
    st.add(dp / sq);
    sw.add(rw / sq * dp);
  }
  if (std::abs(prev - first) > std::abs(prev + first)) {
    throw Error(ErrorCode::numerical, "sqrt(P) branch does not close around the contour");
  }
  const cplx i(0.0, 1.0);
  return {sj.sum / (i * kPi), st.sum * 2.0 / i, sw.sum / (i * kPi)};
}

}  // namespace

ContourResult vanishing_contour(double s, double l, double h, double radius_factor) {
  rho2_of(s);
  const ReducedLevel level = quartic_roots(s, l, h);
  const auto& z = level.roots;
  ContourSpec spec;
  spec.center = cplx(0.5 * (z[0] + z[1]), 0.0);
  const double cx = spec.center.real();
  double dmin = std::abs(z[2] - cx);
  for (double e : {z[3], 4.0, 2.0 + l}) dmin = std::min(dmin, std::abs(e - cx));
  spec.radius = radius_factor * dmin;
  if (!(spec.radius > 1.1 * 0.5 * (z[1] - z[0])) || std::abs(l - cx) >= spec.radius) {
    throw Error(ErrorCode::degenerate_level, "vanishing contour infeasible near a separatrix");
  }
  const auto c = quartic_coefficients(s, l, h);
  spec.nodes = 512;
  Sums cur = trapezoid(s, l, h, c, spec);
  while (true) {
    if (spec.nodes >= 8192) break;
    ContourSpec next = spec;
    next.nodes *= 2;
    Sums nxt = trapezoid(s, l, h, c, next);
    const double diff = std::max({std::abs(nxt.J - cur.J), std::abs(nxt.T - cur.T), std::abs(nxt.W - cur.W)});
    spec = next;
    cur = nxt;
    if (diff < 1e-10) break;
  }
  const double sg = cur.T.real() >= 0.0 ? 1.0 : -1.0;
  ContourResult out;
  out.J = sg * cur.J.real();
  out.T_alpha = sg * cur.T.real();
  out.W_alpha = sg * cur.W.real();
  out.spec = spec;
  return out;
}

BivariateSeries j_series(double s, JSeriesVariant variant) {
  const double r2 = rho2_of(s);
  BivariateSeries f(2);
  f.set(1, 0, -(2.0 - s) / r2);
  f.set(0, 1, 4.0 / r2);
  const double r5 = std::pow(r2, 5);
  const double k = variant == JSeriesVariant::corrected ? -8.0 * s * s * (1.0 - s) * (1.0 - s) / r5
                                                        : 8.0 * s * s * (1.0 - s * s) / r5;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
  f.set(2, 0, k * (44.0 * s5 - 128.0 * s4 + 115.0 * s3 - 28.0 * s2 + 2.0 * s - 4.0));
  f.set(1, 1, k * 2.0 * (16.0 * s4 - 32.0 * s3 + 25.0 * s2 - 30.0 * s + 16.0));
  f.set(0, 2, k * (-18.0) * (2.0 - 3.0 * s));
  return f;
}

double imaginary_action_J(double s, double l, double h, JRoute route) {
  if (route == JRoute::series) return series_eval(j_series(s), l, h);
  return vanishing_contour(s, l, h).J;
}

ImaginaryPeriodRotation imaginary_period_rotation(double s, double l, double h) {
  const auto r = vanishing_contour(s, l, h);
  return {r.T_alpha, r.W_alpha};
}

BivariateSeries birkhoff_Z(double s, int order, JSeriesVariant variant) {
  if (order < 1 || order > 2) throw Error(ErrorCode::unsupported, "J series is available through order 2 only");
  BivariateSeries f = j_series(s, variant);
  if (order == 1) f = f.degree_range(1, 1);
  BivariateSeries g(order);
  for (const auto& [key, v] : f.terms())
    if (key.first + key.second <= order) g.set(key.first, key.second, v);
  return series_invert_second(g);
}

BivariateSeries birkhoff_Z_closed(double s) {
  const double r2 = rho2_of(s);
  BivariateSeries z(2);
  z.set(0, 1, r2 / 4.0);
  z.set(1, 0, (2.0 - s) / 4.0);
  const double k = (1.0 - s) * (1.0 - s) * s * s / (4.0 * r2 * r2);
  z.set(1, 1, k * 2.0 * r2);
  z.set(0, 2, -k * 9.0 * (2.0 - 3.0 * s));
  z.set(2, 0, -k * 3.0 * (2.0 - 3.0 * s));
  return z;
}

double birkhoff_Z_exact(double s, double l, double j) {
  double h = series_eval(birkhoff_Z(s), l, j);
  for (int it = 0; it < 40; ++it) {
    const auto r = vanishing_contour(s, l, h);
    const double dh = (r.J - j) / (r.T_alpha / (2.0 * kPi));
    h -= dh;
    if (std::abs(dh) < 1e-15 * (1.0 + std::abs(h))) return h;
  }
  const auto r = vanishing_contour(s, l, h);
  if (std::abs(r.J - j) > 1e-12) throw Error(ErrorCode::numerical, "Newton inversion of J did not converge");
  return h;
}

}  // namespace semitoric
