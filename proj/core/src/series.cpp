#include "semitoric/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "semitoric/errors.hpp"

namespace semitoric {

BivariateSeries::BivariateSeries(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::contract, "max_degree must be non-negative");
}

BivariateSeries BivariateSeries::first(int max_degree) {
  BivariateSeries s(max_degree);
  if (max_degree >= 1) s.set(1, 0, 1.0);
  return s;
}

BivariateSeries BivariateSeries::second(int max_degree) {
  BivariateSeries s(max_degree);
  if (max_degree >= 1) s.set(0, 1, 1.0);
  return s;
}

double BivariateSeries::coeff(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? 0.0 : it->second;
}

void BivariateSeries::set(int a, int b, double value) {
  if (a < 0 || b < 0 || a + b > max_degree_) {
    throw Error(ErrorCode::contract, "exponent (" + std::to_string(a) + "," + std::to_string(b) +
                                         ") exceeds max_degree " + std::to_string(max_degree_));
  }
  if (value == 0.0) {
    coeffs_.erase({a, b});
  } else {
    coeffs_[{a, b}] = value;
  }
}

void BivariateSeries::add_to(int a, int b, double value) { set(a, b, coeff(a, b) + value); }

double BivariateSeries::eval(double x, double y) const {
  // Horner in x over Horner-in-y inner polynomials.
  double acc = 0.0;
  for (int a = max_degree_; a >= 0; --a) {
    double inner = 0.0;
    for (int b = max_degree_ - a; b >= 0; --b) inner = inner * y + coeff(a, b);
    acc = acc * x + inner;
  }
  return acc;
}

bool BivariateSeries::approx_equal(const BivariateSeries& other, double tol) const {
  if (max_degree_ != other.max_degree_) return false;
  return (*this - other).max_abs_coeff() <= tol;
}

double BivariateSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, v] : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

BivariateSeries BivariateSeries::degree_range(int lo, int hi) const {
  BivariateSeries out(max_degree_);
  for (const auto& [k, v] : coeffs_) {
    int d = k.first + k.second;
    if (d >= lo && d <= hi) out.set(k.first, k.second, v);
  }
  return out;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  if (rhs.max_degree_ != max_degree_) throw Error(ErrorCode::contract, "series degree mismatch");
  for (const auto& [k, v] : rhs.coeffs_) add_to(k.first, k.second, v);
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  if (rhs.max_degree_ != max_degree_) throw Error(ErrorCode::contract, "series degree mismatch");
  for (const auto& [k, v] : rhs.coeffs_) add_to(k.first, k.second, -v);
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(double k) {
  for (auto& [key, v] : coeffs_) v *= k;
  if (k == 0.0) coeffs_.clear();
  return *this;
}

BivariateSeries series_arithmetic(const BivariateSeries& a, const BivariateSeries& b, SeriesOp op) {
  if (a.max_degree() != b.max_degree()) throw Error(ErrorCode::contract, "series degree mismatch");
  BivariateSeries out(a.max_degree());
  switch (op) {
    case SeriesOp::add:
      out = a;
      out += b;
      break;
    case SeriesOp::sub:
      out = a;
      out -= b;
      break;
    case SeriesOp::mul:
      for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
          int x = ka.first + kb.first;
          int y = ka.second + kb.second;
          if (x + y <= out.max_degree()) out.add_to(x, y, va * vb);
        }
      }
      break;
  }
  return out;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  return series_arithmetic(a, b, SeriesOp::add);
}
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  return series_arithmetic(a, b, SeriesOp::sub);
}
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  return series_arithmetic(a, b, SeriesOp::mul);
}
BivariateSeries operator*(double k, const BivariateSeries& a) {
  BivariateSeries out = a;
  out *= k;
  return out;
}

double series_eval(const BivariateSeries& f, double x, double y) { return f.eval(x, y); }

BivariateSeries compose_second(const BivariateSeries& f, const BivariateSeries& g) {
  const int n = f.max_degree();
  if (g.max_degree() != n) throw Error(ErrorCode::contract, "series degree mismatch");
  if (g.coeff(0, 0) != 0.0) throw Error(ErrorCode::contract, "inner series must vanish at the origin");
  // powers[b] = g^b, xpow[a] = x^a
  std::vector<BivariateSeries> gpow{BivariateSeries(n)};
  gpow[0].set(0, 0, 1.0);
  for (int b = 1; b <= n; ++b) gpow.push_back(gpow.back() * g);
  BivariateSeries out(n);
  for (const auto& [k, v] : f.terms()) {
    BivariateSeries xa(n);
    xa.set(k.first, 0, 1.0);
    out += v * (xa * gpow[k.second]);
  }
  return out;
}

BivariateSeries series_invert_second(const BivariateSeries& f) {
  const int n = f.max_degree();
  if (n < 1) throw Error(ErrorCode::contract, "inversion needs max_degree >= 1");
  if (f.coeff(0, 0) != 0.0) throw Error(ErrorCode::contract, "series must vanish at the origin");
  const double b = f.coeff(0, 1);
  if (b == 0.0) throw Error(ErrorCode::non_invertible, "zero linear coefficient in the second variable");
  const double a = f.coeff(1, 0);

  BivariateSeries nonlinear = f.degree_range(2, n);
  BivariateSeries base(n);
  base.set(1, 0, -a / b);
  base.set(0, 1, 1.0 / b);

  BivariateSeries g = base;
  BivariateSeries target = BivariateSeries::second(n);
  for (int iter = 0; iter < 4 * n + 8; ++iter) {
    BivariateSeries residual = compose_second(f, g) - target;
    if (residual.max_abs_coeff() < 1e-14) return g;
    g = base - (1.0 / b) * compose_second(nonlinear, g);
  }
  BivariateSeries residual = compose_second(f, g) - target;
  if (residual.max_abs_coeff() > 1e-12) {
    throw Error(ErrorCode::numerical, "series inversion did not converge");
  }
  return g;
}

}  // namespace semitoric
