#include "semitoric/model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

constexpr double kSphereTol = 1e-12;

void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::domain, "s must lie in [0,1], got " + std::to_string(s));
}

}  // namespace

double s_minus() {
  const double r2 = std::numbers::sqrt2;
  return (8.0 + 3.0 * r2 - std::sqrt(82.0 - 16.0 * r2)) / 16.0;
}

double s_plus() {
  const double r2 = std::numbers::sqrt2;
  return (8.0 - 3.0 * r2 + std::sqrt(82.0 + 16.0 * r2)) / 16.0;
}

double transition_quartic(double s) { return (((32.0 * s - 64.0) * s + 23.0) * s + 12.0) * s - 4.0; }

double rho1_squared(double s) { return (((4.0 * s - 8.0) * s + 13.0) * s - 12.0) * s + 4.0; }

double rho2_squared(double s) { return transition_quartic(s); }

SystemParams params(double s) {
  check_s(s);
  SystemParams p;
  p.s = s;
  p.rho1 = std::sqrt(rho1_squared(s));
  p.s_minus = s_minus();
  p.s_plus = s_plus();
  p.has_ff = s > p.s_minus && s < p.s_plus;
  if (p.has_ff) p.rho2 = std::sqrt(rho2_squared(s));
  return p;
}

MomentumValue momentum_map(const CartesianPoint& pt, double s) {
  check_s(s);
  const double n1 = pt.x1 * pt.x1 + pt.y1 * pt.y1 + pt.z1 * pt.z1;
  const double n2 = pt.x2 * pt.x2 + pt.y2 * pt.y2 + pt.z2 * pt.z2;
  if (std::abs(n1 - 1.0) > kSphereTol || std::abs(n2 - 1.0) > kSphereTol) {
    throw Error(ErrorCode::validation, "point is not on S^2 x S^2");
  }
  const double L = pt.z1 + 2.0 * pt.z2;
  const double H = (1.0 - s) * pt.z1 + s * pt.z2 + 2.0 * (1.0 - s) * s * (pt.x1 * pt.x2 + pt.y1 * pt.y2);
  return {L, H};
}

MomentumValue momentum_map(const ChartPoint& pt, double s) {
  check_s(s);
  const double pi = std::numbers::pi;
  if (std::abs(pt.q1) > pi || std::abs(pt.q2) > pi) {
    throw Error(ErrorCode::validation, "chart angles must lie in [-pi, pi]");
  }
  const double l = pt.p1 + 1.0;
  const double lo = std::max(0.0, l);
  const double hi = std::min(l + 2.0, 4.0);
  if (pt.p2 < lo - kSphereTol || pt.p2 > hi + kSphereTol) {
    throw Error(ErrorCode::validation, "p2 outside [max(0,l), min(l+2,4)]");
  }
  const double z2 = std::clamp(pt.p2 / 2.0 - 1.0, -1.0, 1.0);
  const double z1 = std::clamp(pt.p1 - pt.p2 + 2.0, -1.0, 1.0);
  const double r = std::sqrt(std::max(0.0, (1.0 - z1 * z1) * (1.0 - z2 * z2)));
  const double H = (1.0 - s) * z1 + s * z2 + 2.0 * (1.0 - s) * s * r * std::cos(pt.q2);
  return {pt.p1, H};
}

ChartPoint to_chart(const CartesianPoint& pt) {
  const double th1 = std::atan2(pt.y1, pt.x1);
  const double th2 = std::atan2(pt.y2, pt.x2);
  double q2 = th1 - th2;
  if (q2 > std::numbers::pi) q2 -= 2.0 * std::numbers::pi;
  if (q2 < -std::numbers::pi) q2 += 2.0 * std::numbers::pi;
  return {-th1, pt.z1 + 2.0 * pt.z2, q2, 2.0 * (1.0 + pt.z2)};
}

CartesianPoint from_chart(const ChartPoint& pt) {
  const double z2 = pt.p2 / 2.0 - 1.0;
  const double z1 = pt.p1 - pt.p2 + 2.0;
  const double th1 = -pt.q1;
  const double th2 = th1 - pt.q2;
  const double r1 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
  const double r2 = std::sqrt(std::max(0.0, 1.0 - z2 * z2));
  return {r1 * std::cos(th1), r1 * std::sin(th1), z1, r2 * std::cos(th2), r2 * std::sin(th2), z2};
}

namespace {

// Linearisation at a pole pair with orientations sigma1, sigma2 (+1 north, -1 south),
// in coordinates (x1, y1, x2, y2).
std::array<std::complex<double>, 4> pole_eigenvalues(double s, int sigma1, int sigma2, double c) {
  Eigen::Matrix4d hess_L = Eigen::Matrix4d::Zero();
  hess_L(0, 0) = hess_L(1, 1) = -sigma1;
  hess_L(2, 2) = hess_L(3, 3) = -2.0 * sigma2;

  Eigen::Matrix4d hess_H = Eigen::Matrix4d::Zero();
  hess_H(0, 0) = hess_H(1, 1) = -(1.0 - s) * sigma1;
  hess_H(2, 2) = hess_H(3, 3) = -s * sigma2;
  const double k = 2.0 * (1.0 - s) * s;
  hess_H(0, 2) = hess_H(2, 0) = k;
  hess_H(1, 3) = hess_H(3, 1) = k;

  // omega = -(sigma1 dx1^dy1 + 2 sigma2 dx2^dy2)
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = -sigma1;
  omega(1, 0) = sigma1;
  omega(2, 3) = -2.0 * sigma2;
  omega(3, 2) = 2.0 * sigma2;

  Eigen::Matrix4d m = omega.inverse() * (c * hess_L + hess_H);
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m, false);
  std::array<std::complex<double>, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()[i];
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

bool distinct(const std::array<std::complex<double>, 4>& ev, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(ev[i] - ev[j]) <= tol) return false;
  return true;
}

}  // namespace

std::vector<FixedPoint> classify_fixed_points(double s) {
  check_s(s);
  if (std::abs(s - s_minus()) < 1e-13 || std::abs(s - s_plus()) < 1e-13) {
    throw Error(ErrorCode::degenerate_level, "s is a Hamiltonian-Hopf transition value");
  }
  struct Pole {
    const char* name;
    int sigma1, sigma2;
  };
  const Pole poles[] = {{"NxN", 1, 1}, {"NxS", 1, -1}, {"SxN", -1, 1}, {"SxS", -1, -1}};
  const double combos[] = {0.37, 1.618, -0.73, 2.9};

  std::vector<FixedPoint> out;
  for (const auto& pole : poles) {
    bool done = false;
    for (double c : combos) {
      auto ev = pole_eigenvalues(s, pole.sigma1, pole.sigma2, c);
      double scale = 0.0;
      for (auto e : ev) scale = std::max(scale, std::abs(e));
      if (scale == 0.0 || !distinct(ev, 1e-9 * scale)) continue;
      int n_real = 0;
      int n_imag = 0;
      for (auto e : ev) {
        if (std::abs(e.real()) > 1e-7 * scale) ++n_real;
        if (std::abs(e.imag()) > 1e-7 * scale) ++n_imag;
      }
      FixedPointType type;
      if (n_real == 0) {
        type = FixedPointType::elliptic_elliptic;
      } else if (n_real == 4 && n_imag == 4) {
        type = FixedPointType::focus_focus;
      } else {
        throw Error(ErrorCode::degenerate_level, std::string("unsupported Williamson type at ") + pole.name);
      }
      out.push_back({pole.name, type, ev});
      done = true;
      break;
    }
    if (!done) throw Error(ErrorCode::degenerate_level, std::string("degenerate fixed point ") + pole.name);
  }
  return out;
}

}  // namespace semitoric
