#pragma once

#include <map>
#include <utility>

namespace semitoric {

/// Truncated power series in two variables with total-degree truncation.
///
/// The exponent pair (a,b) multiplies x^a y^b. Throughout the library the
/// first variable is l and the second is either h or j.
class BivariateSeries {
 public:
  using Key = std::pair<int, int>;

  explicit BivariateSeries(int max_degree = 2);

  static BivariateSeries first(int max_degree);   // x
  static BivariateSeries second(int max_degree);  // y

  int max_degree() const noexcept { return max_degree_; }
  double coeff(int a, int b) const;
  void set(int a, int b, double value);
  void add_to(int a, int b, double value);
  const std::map<Key, double>& terms() const noexcept { return coeffs_; }

  double eval(double x, double y) const;
  bool approx_equal(const BivariateSeries& other, double tol) const;
  double max_abs_coeff() const;

  /// Copy keeping only terms of total degree in [lo, hi].
  BivariateSeries degree_range(int lo, int hi) const;

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  BivariateSeries& operator*=(double k);

 private:
  int max_degree_;
  std::map<Key, double> coeffs_;
};

enum class SeriesOp { add, sub, mul };

BivariateSeries series_arithmetic(const BivariateSeries& a, const BivariateSeries& b, SeriesOp op);

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(double k, const BivariateSeries& a);

double series_eval(const BivariateSeries& f, double x, double y);

/// f(x, g(x,y)) truncated at the common degree; g must have zero constant term.
BivariateSeries compose_second(const BivariateSeries& f, const BivariateSeries& g);

/// Given y' = f(x, y) with f(0,0)=0 and nonzero y-coefficient, returns g with
/// y = g(x, y') so that f(x, g(x, y')) = y' through max_degree.
BivariateSeries series_invert_second(const BivariateSeries& f);

}  // namespace semitoric
