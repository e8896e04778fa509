#include "semitoric/twisting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/vanishing.hpp"

namespace semitoric {

namespace {

constexpr double kPi = std::numbers::pi;

struct XiContext {
  BivariateSeries J;
  BivariateSeries S1;
  BivariateSeries S2;
  double j_lin_l = 0.0, j_lin_h = 0.0;
};

XiContext make_context(double s) {
  XiContext c;
  c.J = j_series(s);
  c.S1 = taylor_coeffs_closed(s, 1, TaylorForm::from_partials).coeffs;
  c.S2 = taylor_coeffs_closed(s, 2, TaylorForm::from_partials).coeffs;
  c.j_lin_l = c.J.coeff(1, 0);
  c.j_lin_h = c.J.coeff(0, 1);
  return c;
}

// Im(z log z - z) with arg z in (-pi/2, 3pi/2].
double im_zlogz(double l, double j) {
  const double r = std::hypot(l, j);
  if (r == 0.0) return 0.0;
  double a = std::atan2(j, l);
  if (a <= -kPi / 2.0) a += 2.0 * kPi;
  return l * a + j * std::log(r) - j;
}

XiValue xi_eval(const XiContext& c, double s, int ff, double l, double h) {
  XiValue out;
  double lp, hp, sg;
  if (ff == 1) {
    lp = l;
    hp = h;
    sg = 1.0;
  } else {
    lp = l - 2.0;
    hp = h - (4.0 * s - 2.0);
    sg = -1.0;
  }
  const double j = sg * c.J.eval(sg * lp, sg * hp);
  const double j_lin = c.j_lin_l * lp + c.j_lin_h * hp;
  const BivariateSeries& S = ff == 1 ? c.S1 : c.S2;
  const double quad = S.coeff(2, 0) * lp * lp + S.coeff(1, 1) * lp * j + S.coeff(0, 2) * j * j;
  const double shat = S.coeff(1, 0) * lp + S.coeff(0, 1) * j + quad;
  out.l_local = lp;
  out.j = j;
  out.xi = (shat - im_zlogz(lp, j)) / (2.0 * kPi);
  out.tail = std::abs(quad) / (2.0 * kPi) + std::abs(j - j_lin) * std::abs(S.coeff(0, 1)) / (2.0 * kPi);
  out.valid = out.tail < kXiTailTolerance;
  return out;
}

void check_ff(double s, int ff) {
  if (!params(s).has_ff) throw Error(ErrorCode::domain, "s outside the focus-focus window");
  if (ff != 1 && ff != 2) throw Error(ErrorCode::domain, "ff_index must be 1 or 2");
}

double median(std::vector<double> v) {
  const size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double m = v[n / 2];
  if (n % 2 == 0) {
    const double lo = *std::max_element(v.begin(), v.begin() + n / 2);
    m = 0.5 * (m + lo);
  }
  return m;
}

}  // namespace

XiValue preferred_action_xi_eval(double s, int ff_index, double l, double h) {
  check_ff(s, ff_index);
  return xi_eval(make_context(s), s, ff_index, l, h);
}

double preferred_action_xi(double s, int ff_index, double l, double h) {
  const XiValue v = preferred_action_xi_eval(s, ff_index, l, h);
  if (!v.valid) throw Error(ErrorCode::range, "point outside the validity window of the local expansion");
  return v.xi;
}

long long ImageCloud::n_valid() const {
  return std::count_if(points.begin(), points.end(), [](const CloudPoint& p) { return p.valid; });
}

ImageCloud sample_privileged_image(double s, int ff_index, const GridSpec& grid) {
  check_ff(s, ff_index);
  if (grid.n_q1 < 0 || grid.n_p1 < 0 || grid.n_q2 < 0 || grid.n_p2 < 0)
    throw Error(ErrorCode::domain, "grid dimensions must be non-negative");
  const XiContext ctx = make_context(s);
  ImageCloud cloud;
  cloud.ff_index = ff_index;
  cloud.l_window = ff_index == 1 ? std::make_pair(-3.0, 0.0) : std::make_pair(0.0, 3.0);
  // open-interval samples: n interior points of each box edge
  auto interior = [](double a, double b, int n, int i) { return a + (b - a) * (i + 1) / (n + 1); };
  for (int a = 0; a < grid.n_q1; ++a) {
    const double q1 = interior(-kPi, kPi, grid.n_q1, a);
    for (int b = 0; b < grid.n_p1; ++b) {
      const double p1 = interior(cloud.l_window.first, cloud.l_window.second, grid.n_p1, b);
      for (int c = 0; c < grid.n_q2; ++c) {
        const double q2 = interior(0.0, kPi, grid.n_q2, c);
        for (int d = 0; d < grid.n_p2; ++d) {
          const double p2 = interior(0.0, 4.0, grid.n_p2, d);
          ++cloud.sampled;
          const double z1 = p1 - p2 + 2.0;
          if (!(std::abs(z1) < 1.0)) {
            ++cloud.outside_chart;
            continue;
          }
          const MomentumValue m = momentum_map(ChartPoint{q1, p1, q2, p2}, s);
          const XiValue x = xi_eval(ctx, s, ff_index, shifted_l(m.L), shifted_h(m.H, s));
          cloud.points.push_back({m.L, m.H, x.xi, x.valid});
        }
      }
    }
  }
  return cloud;
}

MatchResult match_polygon(const ImageCloud& cloud, const std::vector<WeightedPolygon>& candidates, double bin_width,
                          double min_margin) {
  if (candidates.empty()) throw Error(ErrorCode::contract, "no candidates");
  const auto [w0, w1] = cloud.l_window;
  const int nb = static_cast<int>(std::lround((w1 - w0) / bin_width));
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> hiH(nb, -inf), loH(nb, inf), hiX(nb, -inf), loX(nb, inf);
  std::vector<char> hiValid(nb, 0), loValid(nb, 0);
  for (const auto& p : cloud.points) {
    const int b = static_cast<int>(std::floor((p.L - w0) / bin_width));
    if (b < 0 || b >= nb) continue;
    if (p.H > hiH[b]) {
      hiH[b] = p.H;
      hiValid[b] = p.valid;
    }
    if (p.H < loH[b]) {
      loH[b] = p.H;
      loValid[b] = p.valid;
    }
    if (p.valid) {
      hiX[b] = std::max(hiX[b], p.Xi);
      loX[b] = std::min(loX[b], p.Xi);
    }
  }
  MatchResult out;
  out.scores.assign(candidates.size(), inf);
  std::vector<double> offsets(candidates.size(), 0.0);
  for (size_t k = 0; k < candidates.size(); ++k) {
    std::vector<double> d;
    for (int b = 0; b < nb; ++b) {
      const double x = w0 + (b + 0.5) * bin_width;
      const auto [ylo, yhi] = vertical_slice(candidates[k], x);
      if (hiValid[b] && std::isfinite(hiX[b])) d.push_back(hiX[b] - yhi);
      if (loValid[b] && std::isfinite(loX[b])) d.push_back(loX[b] - ylo);
    }
    if (d.empty()) continue;
    const double off = median(d);
    double acc = 0.0;
    for (double v : d) acc += std::abs(v - off);
    out.scores[k] = acc / d.size();
    offsets[k] = off;
  }
  std::vector<size_t> order(candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return out.scores[a] < out.scores[b]; });
  out.best = static_cast<int>(order[0]);
  if (!std::isfinite(out.scores[order[0]])) throw Error(ErrorCode::ambiguous_match, "cloud has no usable envelope bins");
  out.best_translation = offsets[order[0]];
  out.margin = order.size() > 1 ? out.scores[order[1]] / out.scores[order[0]] : inf;
  const auto& kap = candidates[order[0]].kappas;
  if (kap && static_cast<int>(kap->size()) >= cloud.ff_index) out.kappa = (*kap)[cloud.ff_index - 1];
  if (out.margin < min_margin) throw Error(ErrorCode::ambiguous_match, "best candidate not separated by the required margin");
  return out;
}

std::vector<WeightedPolygon> twist_candidates(double s) {
  const WeightedPolygon ddz = system_polygon(s, PolygonRep::down_down_zero);
  std::vector<WeightedPolygon> out;
  for (int k = -3; k <= 3; ++k) out.push_back(group_act(ddz, {1, 1}, k));
  return out;
}

TwistResult twisting_index(double s, const GridSpec& grid) {
  const auto cands = twist_candidates(s);
  TwistResult out;
  for (int ff = 1; ff <= 2; ++ff) {
    const ImageCloud cloud = sample_privileged_image(s, ff, grid);
    const MatchResult m = match_polygon(cloud, cands);
    out.kappa_down[ff - 1] = m.kappa;
    out.margin[ff - 1] = m.margin;
    out.translation[ff - 1] = m.best_translation;
  }
  WeightedPolygon ddz = system_polygon(s, PolygonRep::down_down_zero);
  ddz.kappas = std::vector<int>{out.kappa_down[0], out.kappa_down[1]};
  const WeightedPolygon thm = group_act(ddz, {-1, -1}, 0);
  out.kappa_theorem = {(*thm.kappas)[0], (*thm.kappas)[1]};
  return out;
}

double action_gap_slope(double s, int ff_index, double half_width, int samples) {
  check_ff(s, ff_index);
  const XiContext ctx = make_context(s);
  const WeightedPolygon ddz = system_polygon(s, PolygonRep::down_down_zero);
  // up_up -> down_down_zero is T^{-1} followed by t_{(1,1)}; the affine parts enter I_Delta
  const double l0 = ff_index == 1 ? 0.0 : 2.0;
  const double h0 = ff_index == 1 ? 0.0 : 4.0 * s - 2.0;
  std::vector<double> xs, ys;
  for (int i = -samples; i <= samples; ++i) {
    if (i == 0) continue;
    const double lp = half_width * i / samples;
    const double l = l0 + lp;
    const double L = polygon_L(l);
    double I;
    try {
      I = action_I(s, l, h0).value - L;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::domain) throw;
      continue;  // the line leaves the image near the boundary
    }
    for (const auto& c : ddz.cuts) {
      const double lam = static_cast<double>(c.lambda.numerator()) / c.lambda.denominator();
      if (L > lam) I += (L - lam);
    }
    const XiValue x = xi_eval(ctx, s, ff_index, l, h0);
    xs.push_back(lp);
    ys.push_back(I - x.xi);
  }
  const auto left = std::count_if(xs.begin(), xs.end(), [](double x) { return x < 0.0; });
  if (left < 2 || static_cast<long>(xs.size()) - left < 2)
    throw Error(ErrorCode::range, "horizontal line through the focus-focus value leaves the image");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int taylor_shift_kappa(const TaylorInvariant& series) { return -normalize_representative(series).second; }

InvariantReport full_invariants(double s, const GridSpec& grid, bool check_s_independence) {
  InvariantReport rep;
  rep.s = s;
  const auto fps = classify_fixed_points(s);
  rep.n_ff = static_cast<int>(std::count_if(fps.begin(), fps.end(), [](const FixedPoint& f) {
    return f.type == FixedPointType::focus_focus;
  }));
  if (rep.n_ff == 0) {
    rep.polygons.emplace_back("no_ff", system_polygon_no_ff(s));
    return rep;
  }
  rep.heights = height_invariant(s, HeightRoute::closed_form);
  rep.taylor = std::make_pair(taylor_coeffs_closed(s, 1), taylor_coeffs_closed(s, 2));
  TwistResult tw = twisting_index(s, grid);
  rep.twist = tw;
  rep.twist_margin = std::min(tw.margin[0], tw.margin[1]);
  WeightedPolygon thm = system_polygon(s, PolygonRep::theorem);
  thm.kappas = std::vector<int>{tw.kappa_theorem[0], tw.kappa_theorem[1]};
  WeightedPolygon ddz = system_polygon(s, PolygonRep::down_down_zero);
  ddz.kappas = std::vector<int>{tw.kappa_down[0], tw.kappa_down[1]};
  rep.polygons.emplace_back("theorem", thm);
  rep.polygons.emplace_back("up_up", group_act(thm, {1, 1}, 1));
  rep.polygons.emplace_back("down_down_zero", ddz);
  if (check_s_independence) {
    if (std::abs(s - 0.5) < 1e-15) {
      rep.s_independent = true;
    } else {
      const TwistResult ref = twisting_index(0.5, grid);
      rep.s_independent = ref.kappa_down == tw.kappa_down;
    }
  }
  return rep;
}

}  // namespace semitoric
