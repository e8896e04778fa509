#include "emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cli {

std::string num15(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Csv::Csv(std::vector<std::string> header) : width_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) out_ += (i ? "," : "") + header[i];
  out_ += "\n";
}

void Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i) out_ += (i ? "," : "") + cells[i];
  out_ += "\n";
}

void Csv::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  for (double v : values) cells.push_back(num15(v));
  row(cells);
}

namespace {

ordered_json rational(const semitoric::Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return semitoric::to_string(r);
}

}  // namespace

ordered_json to_json(const semitoric::WeightedPolygon& p) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back({rational(v.x), rational(v.y)});
  j["cuts"] = ordered_json::array();
  for (size_t i = 0; i < p.cuts.size(); ++i) {
    ordered_json c{{"lambda", rational(p.cuts[i].lambda)}, {"eps", p.cuts[i].eps}};
    c["kappa"] = p.kappas ? ordered_json((*p.kappas)[i]) : ordered_json(nullptr);
    j["cuts"].push_back(c);
  }
  return j;
}

const std::vector<std::pair<std::string, std::pair<int, int>>>& taylor_terms() {
  static const std::vector<std::pair<std::string, std::pair<int, int>>> t{
      {"l", {1, 0}}, {"j", {0, 1}}, {"l2", {2, 0}}, {"lj", {1, 1}}, {"j2", {0, 2}}};
  return t;
}

ordered_json to_json(const semitoric::TaylorInvariant& t) {
  ordered_json c;
  for (const auto& [name, ij] : taylor_terms()) c[name] = t.coeffs.coeff(ij.first, ij.second);
  return {{"ff_index", t.ff_index}, {"coeffs", c}, {"window_ok", t.window_ok}};
}

ordered_json to_json(const semitoric::ReducedLevel& lv) {
  ordered_json j{{"s", lv.s}, {"l", lv.l}, {"h", lv.h}};
  j["roots"] = ordered_json::array();
  for (double r : lv.roots) j["roots"].push_back(r);
  j["lead"] = lv.lead;
  j["k2"] = lv.k2;
  j["n_eta"] = {{"l", lv.n_l}, {"4", lv.n_4}, {"2+l", lv.n_2l}};
  if (lv.curve) {
    j["curve"] = {{"type", semitoric::to_string(lv.curve->type)},
                  {"cA", lv.curve->cA},
                  {"cB", lv.curve->cB},
                  {"cC", lv.curve->cC}};
  } else {
    j["curve"] = nullptr;
  }
  return j;
}

ordered_json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

Svg::Svg(double x0, double x1, double y0, double y1, int width)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), w_(width) {
  h_ = static_cast<int>(std::lround(width * (y1 - y0) / (x1 - x0)));
  if (h_ < 80) h_ = 80;
}

double Svg::px(double x) const { return 20.0 + (w_ - 40.0) * (x - x0_) / (x1_ - x0_); }
double Svg::py(double y) const { return h_ - 20.0 - (h_ - 40.0) * (y - y0_) / (y1_ - y0_); }

void Svg::polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
  body_ += "<polygon points=\"";
  for (const auto& [x, y] : pts) body_ += num15(px(x)) + "," + num15(py(y)) + " ";
  body_ += "\" style=\"" + style + "\"/>\n";
}

void Svg::line(double xa, double ya, double xb, double yb, const std::string& style) {
  body_ += "<line x1=\"" + num15(px(xa)) + "\" y1=\"" + num15(py(ya)) + "\" x2=\"" + num15(px(xb)) + "\" y2=\"" +
           num15(py(yb)) + "\" style=\"" + style + "\"/>\n";
}

void Svg::dot(double x, double y, double r, const std::string& fill) {
  body_ += "<circle cx=\"" + num15(px(x)) + "\" cy=\"" + num15(py(y)) + "\" r=\"" + num15(r) + "\" fill=\"" + fill +
           "\"/>\n";
}

void Svg::text(double x, double y, const std::string& s) {
  body_ += "<text x=\"" + num15(px(x)) + "\" y=\"" + num15(py(y)) + "\" font-size=\"12\">" + s + "</text>\n";
}

std::string Svg::str() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w_) + "\" height=\"" +
         std::to_string(h_) + "\">\n" + body_ + "</svg>\n";
}

void draw_polygon(Svg& svg, const semitoric::WeightedPolygon& p, const std::string& stroke,
                  const std::vector<double>& heights) {
  std::vector<std::pair<double, double>> pts;
  auto d = [](const semitoric::Rational& r) { return static_cast<double>(r.numerator()) / r.denominator(); };
  for (const auto& v : p.vertices) pts.emplace_back(d(v.x), d(v.y));
  svg.polygon(pts, "fill:none;stroke:" + stroke + ";stroke-width:1.5");
  for (size_t i = 0; i < p.cuts.size(); ++i) {
    const double x = d(p.cuts[i].lambda);
    const auto [lo, hi] = semitoric::vertical_slice(p, x);
    const std::string dash = "stroke:" + stroke + ";stroke-dasharray:4,3";
    if (i < heights.size()) {
      const double y = lo + heights[i];
      svg.line(x, y, x, p.cuts[i].eps > 0 ? hi : lo, dash);
      svg.dot(x, y, 3, stroke);
    } else {
      svg.line(x, lo, x, hi, dash);
    }
  }
}

}  // namespace cli
