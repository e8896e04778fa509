#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "emit.hpp"
#include "semitoric/actions.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/model.hpp"
#include "semitoric/polygons.hpp"
#include "semitoric/reduced.hpp"
#include "semitoric/taylor.hpp"
#include "semitoric/twisting.hpp"

namespace cli {

using namespace semitoric;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kSchemaVersion = "1";

double to_double(const std::string& t, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from '" + t + "'");
  }
}

std::vector<std::string> split(const std::string& t, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

// Evaluates f(i) for i in [0, n) on a few threads; results land in index order.
template <class T, class F>
std::vector<T> parallel_map(size_t n, F f) {
  std::vector<T> out(n);
  const size_t nt = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += nt) out[i] = f(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::string pick_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  if (c.format.empty()) return *allowed.begin();
  for (const char* a : allowed)
    if (c.format == a) return c.format;
  throw UsageError("format '" + c.format + "' is not available for " + c.command);
}

std::vector<double> s_values(const RunConfig& c, bool allow_sweep, std::optional<Sweep> fallback = std::nullopt) {
  if (c.s && c.sweep) throw UsageError("--s and --s-sweep are exclusive");
  if (c.sweep) {
    if (!allow_sweep) throw UsageError(c.command + " does not take --s-sweep");
    return c.sweep->values();
  }
  if (c.s) return {*c.s};
  if (fallback) return fallback->values();
  throw UsageError(c.command + " needs --s");
}

std::vector<int> grid_or(const RunConfig& c, std::vector<int> dflt) {
  if (c.grid.empty()) return dflt;
  if (c.grid.size() != dflt.size())
    throw UsageError(c.command + " takes a grid with " + std::to_string(dflt.size()) + " dimensions");
  for (size_t i = 0; i < c.grid.size(); ++i) {
    // the q1 dimension of phase-space grids does not enter (L, H)
    const int lo = (dflt.size() == 4 && i == 0) ? 1 : 2;
    if (c.grid[i] < lo) throw UsageError("grid dimensions must be >= 2");
  }
  return c.grid;
}

double tol(const RunConfig& c, const std::string& key, double dflt) {
  const auto it = c.tolerances.find(key);
  return it == c.tolerances.end() ? dflt : it->second;
}

const char* type_name(FixedPointType t) {
  return t == FixedPointType::focus_focus ? "focus_focus" : "elliptic_elliptic";
}

ordered_json heights_json(double s) {
  const auto c = height_invariant(s, HeightRoute::closed_form);
  const auto n = height_invariant(s, HeightRoute::numeric);
  return {{"closed_form", {{"h1", c.h1}, {"h2", c.h2}}}, {"numeric", {{"h1", n.h1}, {"h2", n.h2}}}};
}

TaylorForm parse_form(const std::string& f) {
  if (f == "theorem") return TaylorForm::theorem;
  if (f == "from_partials") return TaylorForm::from_partials;
  throw UsageError("--form must be theorem or from_partials");
}

ordered_json invariants_one(double s, const GridSpec& grid) {
  ordered_json j{{"schema", std::string("semitoric.invariants/") + kSchemaVersion}, {"s", s}};
  const InvariantReport r = full_invariants(s, grid);
  j["n_ff"] = r.n_ff;
  j["fixed_points"] = ordered_json::array();
  for (const auto& f : classify_fixed_points(s)) j["fixed_points"].push_back({{"name", f.name}, {"type", type_name(f.type)}});
  j["polygons"] = ordered_json::object();
  for (const auto& [name, p] : r.polygons) j["polygons"][name] = to_json(p);
  if (r.n_ff == 0) return j;
  j["heights"] = heights_json(s);
  j["taylor"] = {{"form", "theorem"}, {"series", {to_json(r.taylor->first), to_json(r.taylor->second)}}};
  const auto& t = *r.twist;
  j["twisting"] = {{"kappa_down_down_zero", t.kappa_down},
                   {"kappa_theorem", t.kappa_theorem},
                   {"margin", t.margin},
                   {"translation", t.translation}};
  if (r.s_independent) j["s_independent"] = *r.s_independent;
  return j;
}

std::string cmd_invariants(const RunConfig& c) {
  pick_format(c, {"json"});
  const auto g = grid_or(c, {1, 151, 40, 64});
  const GridSpec grid{g[0], g[1], g[2], g[3]};
  const auto ss = s_values(c, true);
  if (!c.sweep) return invariants_one(ss[0], grid).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (double s : ss) arr.push_back(invariants_one(s, grid));
  return arr.dump(2) + "\n";
}

std::string cmd_polygon(const RunConfig& c) {
  const std::string fmt = pick_format(c, {"json", "svg"});
  const double s = s_values(c, false)[0];
  std::vector<std::pair<std::string, WeightedPolygon>> reps;
  const bool ff = params(s).has_ff;
  if (ff) {
    for (auto r : {PolygonRep::theorem, PolygonRep::up_up, PolygonRep::down_down_zero})
      reps.emplace_back(to_string(r), system_polygon(s, r));
  } else {
    reps.emplace_back("no_ff", system_polygon_no_ff(s));
  }
  if (fmt == "json") {
    ordered_json j{{"schema", std::string("semitoric.polygon/") + kSchemaVersion}, {"s", s}, {"n_ff", ff ? 2 : 0}};
    j["reps"] = ordered_json::array();
    for (const auto& [name, p] : reps) j["reps"].push_back({{"name", name}, {"polygon", to_json(p)}});
    return j.dump(2) + "\n";
  }
  const std::string want = ff ? c.rep : "no_ff";
  const auto it = std::find_if(reps.begin(), reps.end(), [&](const auto& r) { return r.first == want; });
  if (it == reps.end()) throw UsageError("unknown --rep '" + c.rep + "'");
  const auto& p = it->second;
  std::vector<double> hs;
  if (ff) {
    // marked points sit at the numeric heights above the lower boundary
    const auto h = height_invariant(s, HeightRoute::numeric);
    hs = {h.h1, h.h2};
  }
  const auto [x0, x1] = x_range(p);
  double y0 = 1e9, y1 = -1e9;
  for (const auto& v : p.vertices) {
    const double y = static_cast<double>(v.y.numerator()) / v.y.denominator();
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  Svg svg(x0 - 0.2, x1 + 0.2, y0 - 0.2, y1 + 0.2);
  draw_polygon(svg, p, "black", hs);
  return svg.str();
}

std::string cmd_taylor(const RunConfig& c) {
  const std::string fmt = pick_format(c, {"json", "csv"});
  const TaylorForm form = parse_form(c.form);
  const auto ss = s_values(c, true);
  if (c.ff < 0 || c.ff > 2) throw UsageError("--ff must be 1 or 2");
  ordered_json rows = ordered_json::array();
  Csv csv({"s", "ff", "term", "closed", "numeric", "rel_err"});
  for (double s : ss) {
    std::optional<TaylorInvariant> num;
    if (c.check) num = taylor_coeffs_numeric(s);
    for (int ff : {1, 2}) {
      if (c.ff && ff != c.ff) continue;
      const auto cf = taylor_coeffs_closed(s, ff, form);
      ordered_json e{{"s", s}, {"ff_index", ff}, {"form", c.form}, {"window_ok", cf.window_ok}};
      e["terms"] = ordered_json::array();
      for (const auto& [name, ij] : taylor_terms()) {
        const double v = cf.coeffs.coeff(ij.first, ij.second);
        ordered_json t{{"term", name}, {"closed", v}};
        double nv = std::nan(""), re = std::nan("");
        // the numeric route runs at m1; m2 is compared through the symmetry
        if (num) {
          const auto ref = ff == 1 ? *num : normalize_representative(symmetry_transform(*num, -1, -1)).first;
          nv = ref.coeffs.coeff(ij.first, ij.second);
          re = std::abs(nv - v) / std::abs(v);
          t["numeric"] = nv;
          t["rel_err"] = re;
        }
        e["terms"].push_back(t);
        csv.row({num15(s), std::to_string(ff), name, num15(v), num15(nv), num15(re)});
      }
      rows.push_back(e);
    }
  }
  if (fmt == "csv") return csv.str();
  ordered_json j{{"schema", std::string("semitoric.taylor/") + kSchemaVersion}, {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string cmd_twist(const RunConfig& c) {
  const std::string fmt = pick_format(c, {"json", "csv", "svg"});
  const double s = s_values(c, false)[0];
  const auto g = grid_or(c, {1, 151, 40, 64});
  const GridSpec grid{g[0], g[1], g[2], g[3]};
  if (c.ff < 0 || c.ff > 2) throw UsageError("--ff must be 1 or 2");
  const double bw = tol(c, "bin_width", 0.05), mm = tol(c, "min_margin", 4.0);
  const auto cands = twist_candidates(s);
  if (fmt != "json") {
    const int ff = c.ff ? c.ff : 1;
    const ImageCloud cloud = sample_privileged_image(s, ff, grid);
    if (fmt == "csv") {
      Csv csv({"L", "H", "Xi", "valid"});
      for (const auto& p : cloud.points) csv.row({num15(p.L), num15(p.H), num15(p.Xi), p.valid ? "1" : "0"});
      return csv.str();
    }
    const MatchResult m = match_polygon(cloud, cands, bw, mm);
    const auto& best = cands[m.best];
    double y0 = 1e9, y1 = -1e9;
    for (const auto& v : best.vertices) {
      const double y = static_cast<double>(v.y.numerator()) / v.y.denominator();
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    Svg svg(-3.2, 3.2, y0 - 0.5, y1 + 0.5);
    draw_polygon(svg, best, "black");
    const size_t stride = std::max<size_t>(1, cloud.points.size() / 20000);
    for (size_t i = 0; i < cloud.points.size(); i += stride) {
      const auto& p = cloud.points[i];
      if (p.valid) svg.dot(p.L, p.Xi - m.best_translation, 0.8, "steelblue");
    }
    return svg.str();
  }
  ordered_json j{{"schema", std::string("semitoric.twist/") + kSchemaVersion}, {"s", s}, {"grid", g}};
  j["results"] = ordered_json::array();
  std::array<int, 2> kd{0, 0};
  for (int ff : {1, 2}) {
    if (c.ff && ff != c.ff) continue;
    const ImageCloud cloud = sample_privileged_image(s, ff, grid);
    const MatchResult m = match_polygon(cloud, cands, bw, mm);
    kd[ff - 1] = m.kappa;
    ordered_json scores = ordered_json::array();
    for (size_t k = 0; k < m.scores.size(); ++k)
      scores.push_back({{"k", static_cast<int>(k) - 3}, {"score", std::isfinite(m.scores[k]) ? ordered_json(m.scores[k]) : ordered_json(nullptr)}});
    j["results"].push_back({{"ff_index", ff},
                            {"cloud",
                             {{"sampled", cloud.sampled},
                              {"outside_chart", cloud.outside_chart},
                              {"points", cloud.points.size()},
                              {"valid", cloud.n_valid()}}},
                            {"match",
                             {{"kappa_down_down_zero", m.kappa},
                              {"margin", m.margin},
                              {"translation", m.best_translation},
                              {"scores", scores}}}});
  }
  if (!c.ff) {
    WeightedPolygon ddz = system_polygon(s, PolygonRep::down_down_zero);
    ddz.kappas = std::vector<int>{kd[0], kd[1]};
    j["kappa_theorem"] = *group_act(ddz, {-1, -1}, 0).kappas;
  }
  return j.dump(2) + "\n";
}

std::pair<double, double> p2_bounds(double l) { return {std::max(0.0, l), std::min(2.0 + l, 4.0)}; }

std::pair<double, double> image_range(double s, double l) {
  const auto [lo, hi] = p2_bounds(l);
  double mn = 1e300, mx = -1e300;
  for (int i = 0; i <= 4000; ++i) {
    const double p = lo + (hi - lo) * i / 4000.0;
    for (double q : {0.0, kPi}) {
      const double h = shifted_h(reduced_hamiltonian(s, l, q, p), s);
      mn = std::min(mn, h);
      mx = std::max(mx, h);
    }
  }
  return {mn, mx};
}

// Marching squares on a row-major grid, segments for one level.
void contour(Svg& svg, const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& f,
             double level, const std::string& style) {
  const size_t nx = x.size(), ny = y.size();
  auto at = [&](size_t i, size_t k) { return f[i * ny + k] - level; };
  for (size_t i = 0; i + 1 < nx; ++i) {
    for (size_t k = 0; k + 1 < ny; ++k) {
      const double v[4] = {at(i, k), at(i + 1, k), at(i + 1, k + 1), at(i, k + 1)};
      const double px[4] = {x[i], x[i + 1], x[i + 1], x[i]};
      const double py[4] = {y[k], y[k], y[k + 1], y[k + 1]};
      std::vector<std::pair<double, double>> cross;
      for (int e = 0; e < 4; ++e) {
        const int n = (e + 1) % 4;
        if ((v[e] < 0) != (v[n] < 0)) {
          const double t = v[e] / (v[e] - v[n]);
          cross.emplace_back(px[e] + t * (px[n] - px[e]), py[e] + t * (py[n] - py[e]));
        }
      }
      for (size_t m = 0; m + 1 < cross.size(); m += 2)
        svg.line(cross[m].first, cross[m].second, cross[m + 1].first, cross[m + 1].second, style);
    }
  }
}

std::string cmd_portrait(const RunConfig& c) {
  const std::string fmt = pick_format(c, {"csv", "svg", "json"});
  const double s = s_values(c, false)[0];
  if (!c.l) throw UsageError("portrait needs --l");
  const double l = *c.l;
  if (!(l > -2.0 && l < 4.0)) throw Error(ErrorCode::domain, "l outside (-2, 4)");
  const auto g = grid_or(c, {181, 121});
  const auto [lo, hi] = p2_bounds(l);
  const auto [hmin, hmax] = image_range(s, l);
  const auto sep = separatrix_levels(s, l);
  std::vector<double> levels;
  for (int i = 1; i <= 11; ++i) levels.push_back(hmin + (hmax - hmin) * i / 12.0);
  if (fmt == "json") {
    ordered_json j{{"schema", std::string("semitoric.portrait/") + kSchemaVersion}, {"s", s}, {"l", l}};
    j["h_range"] = {hmin, hmax};
    j["separatrices"] = {{"h_lminus", sep.h_lminus()}, {"h_lplus", sep.h_lplus()}};
    j["levels"] = ordered_json::array();
    for (double h : levels) {
      try {
        j["levels"].push_back(to_json(quartic_roots(s, l, h)));
      } catch (const Error& e) {
        j["levels"].push_back({{"h", h}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
      }
    }
    return j.dump(2) + "\n";
  }
  std::vector<double> q(g[0]), p(g[1]);
  for (int i = 0; i < g[0]; ++i) q[i] = 2 * kPi * i / (g[0] - 1);
  for (int k = 0; k < g[1]; ++k) p[k] = lo + (hi - lo) * k / (g[1] - 1);
  const auto f = parallel_map<double>(q.size() * p.size(), [&](size_t idx) {
    return shifted_h(reduced_hamiltonian(s, l, q[idx / p.size()], p[idx % p.size()]), s);
  });
  if (fmt == "csv") {
    Csv csv({"q2[rad]", "p2[momentum]", "h[energy]"});
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t k = 0; k < p.size(); ++k) csv.row({q[i], p[k], f[i * p.size() + k]});
    return csv.str();
  }
  Svg svg(0.0, 2 * kPi, lo, hi, 720);
  for (double h : levels) contour(svg, q, p, f, h, "stroke:gray;stroke-width:1");
  for (double h : {sep.h_lminus(), sep.h_lplus()})
    if (h > hmin && h < hmax) contour(svg, q, p, f, h, "stroke:crimson;stroke-width:1.5");
  return svg.str();
}

std::string cmd_action_grid(const RunConfig& c) {
  pick_format(c, {"csv"});
  const double s = s_values(c, false)[0];
  params(s);
  const auto g = grid_or(c, {40, 40});
  std::vector<double> ls;
  if (c.l) {
    ls = {*c.l};
  } else {
    for (int i = 0; i < g[0]; ++i) ls.push_back(-2.0 + 6.0 * (i + 1) / (g[0] + 1));
  }
  struct Row {
    double l, h, I, T, W;
    std::string status;
  };
  const int nh = g[1];
  const auto rows = parallel_map<std::vector<Row>>(ls.size(), [&](size_t i) {
    const double l = ls[i];
    const auto [hmin, hmax] = image_range(s, l);
    std::vector<Row> out;
    for (int k = 0; k < nh; ++k) {
      Row r{l, hmin + (hmax - hmin) * (k + 1) / (nh + 1), std::nan(""), std::nan(""), std::nan(""), "ok"};
      try {
        r.I = action_I(s, l, r.h).value;
        r.T = period_T(s, l, r.h);
        r.W = rotation_W(s, l, r.h);
      } catch (const Error& e) {
        r.status = to_string(e.code());
      }
      out.push_back(r);
    }
    return out;
  });
  Csv csv({"l[action]", "h[energy]", "I[action]", "T[time]", "W[1]", "status"});
  for (const auto& block : rows)
    for (const auto& r : block) csv.row({num15(r.l), num15(r.h), num15(r.I), num15(r.T), num15(r.W), r.status});
  return csv.str();
}

std::string cmd_height(const RunConfig& c) {
  const std::string fmt = pick_format(c, {"csv", "json"});
  const auto ss = s_values(c, true, Sweep{0.29, 0.87, 0.01});
  Csv csv({"s", "h1_closed[action]", "h2_closed[action]", "h1_numeric[action]", "h2_numeric[action]"});
  ordered_json rows = ordered_json::array();
  for (double s : ss) {
    const auto cf = height_invariant(s, HeightRoute::closed_form);
    const auto n = height_invariant(s, HeightRoute::numeric);
    csv.row({s, cf.h1, cf.h2, n.h1, n.h2});
    rows.push_back({{"s", s}, {"closed_form", {{"h1", cf.h1}, {"h2", cf.h2}}}, {"numeric", {{"h1", n.h1}, {"h2", n.h2}}}});
  }
  if (fmt == "csv") return csv.str();
  return ordered_json{{"schema", std::string("semitoric.height/") + kSchemaVersion}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace

std::vector<double> Sweep::values() const {
  std::vector<double> out;
  const long n = std::lround(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + step * static_cast<double>(i));
  return out;
}

Sweep parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--s-sweep expects start:stop:step");
  Sweep w{to_double(parts[0], "sweep start"), to_double(parts[1], "sweep stop"), to_double(parts[2], "sweep step")};
  if (!(w.step > 0)) throw UsageError("sweep step must be positive");
  if (w.stop < w.start) throw UsageError("sweep stop is below start");
  return w;
}

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, 'x')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("cannot parse grid '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

std::string run(const RunConfig& c) {
  if (c.command == "invariants") return cmd_invariants(c);
  if (c.command == "polygon") return cmd_polygon(c);
  if (c.command == "taylor") return cmd_taylor(c);
  if (c.command == "twist") return cmd_twist(c);
  if (c.command == "portrait") return cmd_portrait(c);
  if (c.command == "action-grid") return cmd_action_grid(c);
  if (c.command == "height") return cmd_height(c);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace cli
