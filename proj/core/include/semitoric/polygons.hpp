#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semitoric {

using Rational = boost::rational<long long>;

struct RPoint {
  Rational x;
  Rational y;
  bool operator==(const RPoint&) const = default;
};

struct Cut {
  Rational lambda;
  int eps = 1;
  bool operator==(const Cut&) const = default;
};

/// Rational convex polygon with vertical cuts and optional twisting labels.
/// Vertices are counterclockwise without repeated or collinear points.
struct WeightedPolygon {
  std::vector<RPoint> vertices;
  std::vector<Cut> cuts;
  std::optional<std::vector<int>> kappas;
};

/// Counterclockwise convex hull with collinear points removed.
std::vector<RPoint> convex_hull(std::vector<RPoint> pts);
WeightedPolygon make_polygon(std::vector<RPoint> pts, std::vector<Cut> cuts = {},
                             std::optional<std::vector<int>> kappas = std::nullopt);

/// Throws validation errors on a broken polygon invariant.
void validate(const WeightedPolygon& p);

/// Same vertex set up to cyclic rotation, same cuts and labels.
bool same_polygon(const WeightedPolygon& a, const WeightedPolygon& b);

RPoint shear_T(const RPoint& p, int n);
WeightedPolygon shear_T(const WeightedPolygon& p, int n);

/// Applies t_{lambda_r}^{u_r}: (x, y) -> (x, y + u_r (x - lambda_r)) for x > lambda_r.
RPoint cut_shear(const RPoint& p, const std::vector<Cut>& cuts, const std::vector<int>& u);
WeightedPolygon cut_shear(const WeightedPolygon& p, const std::vector<int>& u);

/// Action of (eps', n): u_r = (eps_r - eps_r eps'_r)/2, polygon -> t_u(T^n P),
/// eps_r -> eps'_r eps_r, kappa_r -> kappa_r + n + sum_{i<=r} u_i.
WeightedPolygon group_act(const WeightedPolygon& p, const std::vector<int>& eps_prime, int n);

enum class PolygonRep { up_up, theorem, down_down_zero };
const char* to_string(PolygonRep r);

/// Pinned representatives. For s outside the focus-focus window only the
/// cut-free polygon exists and is returned by system_polygon_no_ff.
WeightedPolygon system_polygon(double s, PolygonRep rep);
WeightedPolygon system_polygon_no_ff(double s);

/// Lower and upper boundary of the polygon at abscissa x.
std::pair<double, double> vertical_slice(const WeightedPolygon& p, double x);
double lower_boundary(const WeightedPolygon& p, double x);
double upper_boundary(const WeightedPolygon& p, double x);
std::pair<double, double> x_range(const WeightedPolygon& p);
Rational area(const WeightedPolygon& p);

enum class HeightRoute { closed_form, numeric };

/// Closed-form function F(s) whose value enters h1 = -F/(2 pi) + 2 u(2 - 3s).
double height_F(double s);

struct Heights {
  double h1 = 0.0;
  double h2 = 0.0;
};

Heights height_invariant(double s, HeightRoute route);

std::string to_string(const Rational& r);

}  // namespace semitoric
