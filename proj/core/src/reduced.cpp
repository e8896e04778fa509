#include "semitoric/reduced.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

void check_open_s(double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::domain, "s must lie in (0,1)");
}

double newton_polish(const std::array<double, 5>& c, double x, int steps) {
  for (int i = 0; i < steps; ++i) {
    double p = c[4], dp = 0.0;
    for (int k = 3; k >= 0; --k) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
    if (dp == 0.0) break;
    double nx = x - p / dp;
    if (!std::isfinite(nx)) break;
    if (std::abs(nx - x) > 1e-3 * (1.0 + std::abs(x))) break;  // refuse large jumps near clusters
    x = nx;
  }
  return x;
}

// Divide the quartic by (p - r) twice, leaving a quadratic a2 p^2 + a1 p + a0.
std::array<double, 3> deflate(const std::array<double, 5>& c, double r1, double r2) {
  std::array<double, 4> q{};
  q[3] = c[4];
  for (int k = 2; k >= 0; --k) q[k] = c[k + 1] + r1 * q[k + 1];
  std::array<double, 3> w{};
  w[2] = q[3];
  for (int k = 1; k >= 0; --k) w[k] = q[k + 1] + r2 * w[k + 1];
  return w;
}

std::array<double, 2> stable_quadratic(const std::array<double, 3>& w) {
  const double a = w[2], b = w[1], c = w[0];
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) disc = 0.0;
  const double sq = std::sqrt(disc);
  double x1, x2;
  if (b == 0.0 && c == 0.0) {
    x1 = x2 = 0.0;
  } else {
    const double q = -0.5 * (b + std::copysign(sq, b));
    x1 = q / a;
    x2 = (q != 0.0) ? c / q : x1;
  }
  if (x1 > x2) std::swap(x1, x2);
  return {x1, x2};
}

}  // namespace

SeparatrixLevels separatrix_levels(double s, double l) {
  SeparatrixLevels out;
  out.l = l;
  out.h0 = l * (1.0 - s);
  out.hl = s * l / 2.0;
  out.h4 = 6.0 * (s - 2.0 / 3.0) + l * (1.0 - s);
  out.h2l = 3.0 * (s - 2.0 / 3.0) + s * l / 2.0;
  out.l_minus = std::max(0.0, l);
  out.l_plus = std::min(2.0 + l, 4.0);
  return out;
}

double reduced_A(double s, double l, double p2) { return l + 1.0 - p2 - 2.0 * s - l * s + 1.5 * s * p2; }

double reduced_B(double s, double l, double p2) {
  const double c = s * s * (1.0 - s) * (1.0 - s);
  return c * p2 * (p2 - l) * (p2 - 4.0) * (p2 - 2.0 - l);
}

double reduced_hamiltonian(double s, double l, double q2, double p2) {
  const double lo = std::max(0.0, l);
  const double hi = std::min(2.0 + l, 4.0);
  if (p2 < lo - 1e-14 || p2 > hi + 1e-14) throw Error(ErrorCode::domain, "p2 outside coordinate bounds");
  double b = reduced_B(s, l, p2);
  if (b < 0.0) {
    if (b < -1e-14) throw Error(ErrorCode::domain, "B negative inside coordinate bounds");
    b = 0.0;
  }
  return reduced_A(s, l, p2) + std::cos(q2) * std::sqrt(b);
}

std::array<double, 5> quartic_coefficients(double s, double l, double h) {
  const double c = s * s * (1.0 - s) * (1.0 - s);
  // p (p - l)(p - 4)(p - 2 - l), expanded ascending.
  std::array<double, 5> b{0.0, 1.0, 0.0, 0.0, 0.0};
  const double rts[3] = {l, 4.0, 2.0 + l};
  for (double r : rts) {
    std::array<double, 5> nb{};
    for (int k = 0; k < 5; ++k) {
      if (k > 0) nb[k] += b[k - 1];
      nb[k] -= r * b[k];
    }
    b = nb;
  }
  const double alpha = 1.0 - 1.5 * s;
  const double beta = h - l + l * s;
  std::array<double, 5> out{};
  for (int k = 0; k < 5; ++k) out[k] = c * b[k];
  out[2] -= alpha * alpha;
  out[1] -= 2.0 * alpha * beta;
  out[0] -= beta * beta;
  return out;
}

double quartic_eval(const std::array<double, 5>& c, double p) {
  return (((c[4] * p + c[3]) * p + c[2]) * p + c[1]) * p + c[0];
}

const char* to_string(CurveType t) {
  switch (t) {
    case CurveType::I: return "I";
    case CurveType::II: return "II";
    case CurveType::III: return "III";
  }
  return "?";
}

double legendre_characteristic(const std::array<double, 4>& z, double eta) {
  return (z[2] - z[1]) * (z[0] - eta) / ((z[2] - z[0]) * (z[1] - eta));
}

ReducedLevel quartic_roots(double s, double l, double h) {
  check_open_s(s);
  if (!(l >= -2.0 && l <= 4.0)) throw Error(ErrorCode::domain, "l must lie in [-2,4]");
  ReducedLevel out;
  out.s = s;
  out.l = l;
  out.h = h;
  out.sep = separatrix_levels(s, l);
  const auto c = quartic_coefficients(s, l, h);
  out.lead = c[4];

  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  for (int i = 1; i < 4; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < 4; ++i) comp(i, 3) = -c[i] / c[4];
  Eigen::EigenSolver<Eigen::Matrix4d> solver(comp, false);
  std::array<double, 4> z{};
  double scale = 1.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(solver.eigenvalues()[i]));
  for (int i = 0; i < 4; ++i) {
    auto ev = solver.eigenvalues()[i];
    if (std::abs(ev.imag()) > 1e-6 * scale) {
      throw Error(ErrorCode::domain, "level (l,h) lies outside the reduced image (complex roots)");
    }
    z[i] = ev.real();
  }
  std::sort(z.begin(), z.end());

  // Polish the two roots outside the closest pair, then deflate for the pair.
  int pair = 0;
  double best = z[1] - z[0];
  for (int i = 1; i < 3; ++i) {
    if (z[i + 1] - z[i] < best) {
      best = z[i + 1] - z[i];
      pair = i;
    }
  }
  std::array<int, 2> others{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != pair && i != pair + 1) others[n++] = i;
  for (int i : others) z[i] = newton_polish(c, z[i], 6);
  auto qr = stable_quadratic(deflate(c, z[others[0]], z[others[1]]));
  z[pair] = qr[0];
  z[pair + 1] = qr[1];
  for (int i : {pair, pair + 1}) {
    if (z[pair + 1] - z[pair] > 1e-6 * scale) z[i] = newton_polish(c, z[i], 2);
  }
  std::sort(z.begin(), z.end());
  out.roots = z;

  const double tol = 1e-9;
  const double lo = std::min(0.0, l), mid_lo = std::max(0.0, l);
  const double mid_hi = std::min(4.0, l + 2.0), hi = std::max(4.0, l + 2.0);
  if (!(z[0] <= lo + tol && mid_lo - tol <= z[1] && z[1] <= z[2] + tol && z[2] <= mid_hi + tol &&
        hi - tol <= z[3])) {
    throw Error(ErrorCode::numerical, "root bracketing violated at (l,h) = (" + std::to_string(l) + ", " +
                                          std::to_string(h) + ")");
  }
  if (z[1] - z[0] < 1e-10 && (l != 0.0 || h != 0.0)) {
    throw Error(ErrorCode::degenerate_level, "vanishing-cycle roots collide away from the focus-focus value");
  }

  const double a = z[3], b = z[2], cc = z[1], d = z[0];
  out.k2 = (b - cc) * (a - d) / ((a - cc) * (b - d));
  out.n_l = legendre_characteristic(z, l);
  out.n_4 = legendre_characteristic(z, 4.0);
  out.n_2l = legendre_characteristic(z, 2.0 + l);
  try {
    out.curve = classify_curve(out);
  } catch (const Error&) {
    out.curve.reset();
  }
  return out;
}

CurveClass classify_curve(const ReducedLevel& level) {
  const double s = level.s, l = level.l, h = level.h;
  const auto& sep = level.sep;
  const double hm = sep.h_lminus(), hp = sep.h_lplus();
  if (std::abs(h - hm) <= kTauType || std::abs(h - hp) <= kTauType) {
    throw Error(ErrorCode::degenerate_level, "level within tau_type of a separatrix");
  }
  const bool s_eq = std::abs(s - 2.0 / 3.0) < 1e-15;
  const bool below = s < 2.0 / 3.0 && !s_eq;
  CurveType type;
  if (s_eq) {
    type = h > hm ? CurveType::I : CurveType::III;
  } else if (below) {
    type = h > hm ? CurveType::I : (h > hp ? CurveType::II : CurveType::III);
  } else {
    type = h > hp ? CurveType::I : (h > hm ? CurveType::II : CurveType::III);
  }
  const double z2 = level.roots[1], z3 = level.roots[2];
  const double lm = sep.l_minus, lp = sep.l_plus;

  CurveClass out{type, 0.0, 0.0, 0.0};
  switch (type) {
    case CurveType::I:
      out.cA = lp - lm;
      out.cB = lp - lm;
      break;
    case CurveType::II:
      out.cA = below ? lp - z2 : z3 - lm;
      out.cB = below ? lp : -lm;
      break;
    case CurveType::III:
      out.cA = z3 - z2;
      out.cB = 0.0;
      break;
  }
  // Column chosen by the right-hand limit at l = 0 and l = 2.
  const int col = l < 0.0 ? 0 : (l < 2.0 ? 1 : 2);
  static const int table_below[3][3] = {{-1, 0, 1}, {-1, -1, 0}, {0, 0, 0}};
  static const int table_above[3][3] = {{-1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
  const int row = type == CurveType::I ? 0 : (type == CurveType::II ? 1 : 2);
  out.cC = (below || s_eq) ? table_below[row][col] : table_above[row][col];
  if (s_eq && type == CurveType::III) out.cC = 0.0;
  return out;
}

CurveClass classify_curve(double s, double l, double h) { return classify_curve(quartic_roots(s, l, h)); }

}  // namespace semitoric
