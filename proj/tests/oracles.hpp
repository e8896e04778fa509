#pragma once

// Independent reference computations shared by the unit tests and the acceptance binary.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

constexpr double pi = std::numbers::pi;

inline double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

inline double K_agm(double k2) { return pi / (2.0 * agm(1.0, std::sqrt(1.0 - k2))); }

// Defining integrals after x = sin t.
inline double K_quad(double k2) {
  auto f = [&](double t) { return 1.0 / std::sqrt(1.0 - k2 * std::sin(t) * std::sin(t)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi / 2, 8, 1e-14);
}

inline double Pi_quad(double n, double k2) {
  auto f = [&](double t) {
    const double s2 = std::sin(t) * std::sin(t);
    return 1.0 / ((1.0 - n * s2) * std::sqrt(1.0 - k2 * s2));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi / 2, 8, 1e-14);
}

// Reduced system, written out independently of the library.
template <class T>
T A(T s, T l, T p) {
  return l + 1 - p - 2 * s - l * s + T(1.5) * s * p;
}
template <class T>
T B(T s, T l, T p) {
  return s * s * (1 - s) * (1 - s) * p * (p - l) * (p - 4) * (p - 2 - l);
}
template <class T>
T P(T s, T l, T h, T p) {
  const T d = h + (1 - 2 * s) - A(s, l, p);
  return B(s, l, p) - d * d;
}

// Sublevel area of {H_red < h} over the reduced sphere divided by 2 pi,
// integrating the exact q2-measure in p2.
inline double area_action(double s, double l, double h) {
  const double lo = std::max(0.0, l), hi = std::min(l + 2.0, 4.0);
  auto f = [&](double p) {
    const double b = std::max(B(s, l, p), 0.0);
    const double num = h + (1 - 2 * s) - A(s, l, p);
    double x;
    if (b == 0.0) {
      x = num >= 0 ? 1.0 : -1.0;
    } else {
      x = std::clamp(num / std::sqrt(b), -1.0, 1.0);
    }
    return (pi - std::acos(x)) / pi;
  };
  // split at the turning points, located by bracketing sign changes of P
  std::vector<double> cuts{lo};
  const int n = 4000;
  auto g = [&](double p) { return P(s, l, h, p); };
  for (int i = 0; i < n; ++i) {
    double a = lo + (hi - lo) * i / n, b = lo + (hi - lo) * (i + 1) / n;
    if ((g(a) < 0) != (g(b) < 0)) {
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        ((g(a) < 0) == (g(m) < 0) ? a : b) = m;
      }
      cuts.push_back(0.5 * (a + b));
    }
  }
  cuts.push_back(hi);
  boost::math::quadrature::tanh_sinh<double> ts(15);
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) total += ts.integrate(f, cuts[i], cuts[i + 1], 1e-14);
  return total;
}

// Extremes of H_red at fixed l (shifted h).
inline std::pair<double, double> h_range(double s, double l) {
  const double lo = std::max(0.0, l), hi = std::min(l + 2.0, 4.0);
  auto top = [&](double p) { return -(A(s, l, p) + std::sqrt(std::max(B(s, l, p), 0.0))); };
  auto bot = [&](double p) { return A(s, l, p) - std::sqrt(std::max(B(s, l, p), 0.0)); };
  const auto mx = boost::math::tools::brent_find_minima(top, lo, hi, 60);
  const auto mn = boost::math::tools::brent_find_minima(bot, lo, hi, 60);
  return {mn.second - (1 - 2 * s), -mx.second - (1 - 2 * s)};
}

// Richardson-extrapolated central difference of f at x.
inline double derivative(const std::function<double(double)>& f, double x, double d = 1e-3) {
  const double d1 = (f(x + d) - f(x - d)) / (2 * d);
  const double d2 = (f(x + d / 2) - f(x - d / 2)) / d;
  return (4 * d2 - d1) / 3;
}

}  // namespace oracle
