#include "semitoric/polygons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"

namespace semitoric {

namespace {

constexpr double kPi = std::numbers::pi;

Rational cross(const RPoint& o, const RPoint& a, const RPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

void require_ff(double s) {
  if (!params(s).has_ff) throw Error(ErrorCode::domain, "polygon rep with cuts requires s in the focus-focus window");
}

// Boundary polygon with breakpoints on every cut line.
std::vector<RPoint> with_breakpoints(const std::vector<RPoint>& v, const std::vector<Cut>& cuts) {
  std::vector<RPoint> out;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[(i + 1) % n];
    out.push_back(a);
    std::vector<Rational> xs;
    for (const auto& c : cuts) {
      const Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
      if (c.lambda > lo && c.lambda < hi) xs.push_back(c.lambda);
    }
    std::sort(xs.begin(), xs.end());
    if (b.x < a.x) std::reverse(xs.begin(), xs.end());
    for (const auto& x : xs) out.push_back({x, a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)});
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<RPoint> convex_hull(std::vector<RPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RPoint& a, const RPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RPoint> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

WeightedPolygon make_polygon(std::vector<RPoint> pts, std::vector<Cut> cuts, std::optional<std::vector<int>> kappas) {
  WeightedPolygon p{convex_hull(std::move(pts)), std::move(cuts), std::move(kappas)};
  validate(p);
  return p;
}

void validate(const WeightedPolygon& p) {
  const size_t n = p.vertices.size();
  if (n < 3) throw Error(ErrorCode::validation, "polygon needs at least three vertices");
  for (size_t i = 0; i < n; ++i) {
    if (cross(p.vertices[i], p.vertices[(i + 1) % n], p.vertices[(i + 2) % n]) <= 0)
      throw Error(ErrorCode::validation, "polygon is not strictly convex counterclockwise");
  }
  const auto [xmin, xmax] = x_range(p);
  for (size_t r = 0; r < p.cuts.size(); ++r) {
    if (r > 0 && !(p.cuts[r - 1].lambda < p.cuts[r].lambda))
      throw Error(ErrorCode::validation, "cut abscissas must be strictly increasing");
    if (p.cuts[r].eps != 1 && p.cuts[r].eps != -1) throw Error(ErrorCode::validation, "cut sign must be +1 or -1");
    const double lam = to_double(p.cuts[r].lambda);
    if (lam < xmin || lam > xmax) throw Error(ErrorCode::validation, "cut line misses the polygon");
  }
  if (p.kappas && p.kappas->size() != p.cuts.size())
    throw Error(ErrorCode::validation, "kappas must align with cuts");
}

bool same_polygon(const WeightedPolygon& a, const WeightedPolygon& b) {
  if (a.vertices.size() != b.vertices.size() || a.cuts != b.cuts || a.kappas != b.kappas) return false;
  const size_t n = a.vertices.size();
  for (size_t off = 0; off < n; ++off) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a.vertices[i] == b.vertices[(i + off) % n];
    if (ok) return true;
  }
  return false;
}

RPoint shear_T(const RPoint& p, int n) { return {p.x, p.y + Rational(n) * p.x}; }

WeightedPolygon shear_T(const WeightedPolygon& p, int n) {
  WeightedPolygon out = p;
  for (auto& v : out.vertices) v = shear_T(v, n);
  return out;
}

RPoint cut_shear(const RPoint& p, const std::vector<Cut>& cuts, const std::vector<int>& u) {
  RPoint out = p;
  for (size_t r = 0; r < cuts.size(); ++r) {
    if (p.x > cuts[r].lambda) out.y += Rational(u[r]) * (p.x - cuts[r].lambda);
  }
  return out;
}

WeightedPolygon cut_shear(const WeightedPolygon& p, const std::vector<int>& u) {
  if (u.size() != p.cuts.size()) throw Error(ErrorCode::contract, "shear vector length must equal the number of cuts");
  std::vector<RPoint> pts = with_breakpoints(p.vertices, p.cuts);
  for (auto& v : pts) v = cut_shear(v, p.cuts, u);
  // the image boundary is convex iff no turn is clockwise
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    if (cross(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) < 0)
      throw Error(ErrorCode::invalid_move, "cut shear produces a non-convex polygon");
  }
  WeightedPolygon out{convex_hull(std::move(pts)), p.cuts, p.kappas};
  validate(out);
  return out;
}

WeightedPolygon group_act(const WeightedPolygon& p, const std::vector<int>& eps_prime, int n) {
  if (!p.kappas) throw Error(ErrorCode::contract, "group_act needs twisting labels");
  if (eps_prime.size() != p.cuts.size()) throw Error(ErrorCode::contract, "eps' length must equal the number of cuts");
  std::vector<int> u(p.cuts.size());
  for (size_t r = 0; r < u.size(); ++r) {
    if (eps_prime[r] != 1 && eps_prime[r] != -1) throw Error(ErrorCode::contract, "eps' entries must be +1 or -1");
    u[r] = (p.cuts[r].eps - p.cuts[r].eps * eps_prime[r]) / 2;
  }
  WeightedPolygon out = cut_shear(shear_T(p, n), u);
  int acc = 0;
  for (size_t r = 0; r < u.size(); ++r) {
    acc += u[r];
    out.cuts[r].eps = eps_prime[r] * p.cuts[r].eps;
    (*out.kappas)[r] = (*p.kappas)[r] + n + acc;
  }
  return out;
}

const char* to_string(PolygonRep r) {
  switch (r) {
    case PolygonRep::up_up: return "up_up";
    case PolygonRep::theorem: return "theorem";
    case PolygonRep::down_down_zero: return "down_down_zero";
  }
  return "?";
}

WeightedPolygon system_polygon(double s, PolygonRep rep) {
  require_ff(s);
  const std::vector<Cut> up{{Rational(-1), 1}, {Rational(1), 1}};
  WeightedPolygon thm = make_polygon({{-3, 2}, {-1, 2}, {1, 0}, {3, -4}}, up, std::vector<int>{-1, -2});
  switch (rep) {
    case PolygonRep::theorem: return thm;
    case PolygonRep::up_up: return group_act(thm, {1, 1}, 1);
    case PolygonRep::down_down_zero: return group_act(thm, {-1, -1}, 0);
  }
  return thm;
}

WeightedPolygon system_polygon_no_ff(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::domain, "s must lie in [0,1]");
  if (params(s).has_ff) throw Error(ErrorCode::domain, "s lies in the focus-focus window");
  if (s < 0.5) return make_polygon({{-3, -1}, {-1, 1}, {1, -1}, {3, 1}});
  return make_polygon({{-3, -1}, {-1, -1}, {1, 1}, {3, 1}});
}

std::pair<double, double> x_range(const WeightedPolygon& p) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& v : p.vertices) {
    lo = std::min(lo, to_double(v.x));
    hi = std::max(hi, to_double(v.x));
  }
  return {lo, hi};
}

std::pair<double, double> vertical_slice(const WeightedPolygon& p, double x) {
  const auto [lo, hi] = x_range(p);
  if (x < lo || x > hi) throw Error(ErrorCode::range, "abscissa outside the polygon");
  double ymin = INFINITY, ymax = -INFINITY;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const double ax = to_double(p.vertices[i].x), ay = to_double(p.vertices[i].y);
    const double bx = to_double(p.vertices[(i + 1) % n].x), by = to_double(p.vertices[(i + 1) % n].y);
    if (x < std::min(ax, bx) || x > std::max(ax, bx)) continue;
    if (ax == bx) {
      ymin = std::min({ymin, ay, by});
      ymax = std::max({ymax, ay, by});
    } else {
      const double y = ay + (by - ay) * (x - ax) / (bx - ax);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  return {ymin, ymax};
}

double lower_boundary(const WeightedPolygon& p, double x) { return vertical_slice(p, x).first; }
double upper_boundary(const WeightedPolygon& p, double x) { return vertical_slice(p, x).second; }

Rational area(const WeightedPolygon& p) {
  Rational a(0);
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& u = p.vertices[i];
    const auto& v = p.vertices[(i + 1) % n];
    a += u.x * v.y - v.x * u.y;
  }
  return a / 2;
}

double height_F(double s) {
  const double r1 = std::sqrt(rho1_squared(s));
  const double r2sq = rho2_squared(s);
  if (!(r2sq > 0.0)) throw Error(ErrorCode::domain, "s outside the focus-focus window");
  const double r2 = std::sqrt(r2sq);
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double den = (-2.0 + 3.0 * s) * r2;
  const double t1 = -4.0 * std::atan((-4.0 - 16.0 * s3 + 8.0 * s4 + 4.0 * s * (3.0 + r1) - s2 * (1.0 + 4.0 * r1)) / den);
  const double t2 =
      -2.0 * std::atan((-4.0 + 32.0 * s3 - 16.0 * s4 + 4.0 * s * (3.0 + 2.0 * r1) - s2 * (25.0 + 8.0 * r1)) / den);
  const double t3 = (2.0 - 3.0 * s) / (2.0 * (s - 1.0) * s) * std::log(-r1 / (-6.0 * s + 6.0 * s2 + r2));
  return t1 + t2 + t3;
}

Heights height_invariant(double s, HeightRoute route) {
  if (!params(s).has_ff) throw Error(ErrorCode::domain, "height invariant requires s in the focus-focus window");
  Heights out;
  if (route == HeightRoute::closed_form) {
    const double u = (2.0 - 3.0 * s) > 0.0 ? 1.0 : 0.0;
    out.h1 = -height_F(s) / (2.0 * kPi) + 2.0 * u;
  } else {
    out.h1 = action_I(s, 0.0, 0.0).value;
  }
  out.h2 = 2.0 - out.h1;
  return out;
}

}  // namespace semitoric
