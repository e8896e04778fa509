#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "semitoric/polygons.hpp"
#include "semitoric/reduced.hpp"
#include "semitoric/taylor.hpp"

namespace cli {

using nlohmann::ordered_json;

std::string num15(double v);

class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  void row(const std::vector<double>& values);
  std::string str() const { return out_; }

 private:
  size_t width_;
  std::string out_;
};

ordered_json to_json(const semitoric::WeightedPolygon& p);
ordered_json to_json(const semitoric::TaylorInvariant& t);
ordered_json to_json(const semitoric::ReducedLevel& lv);
ordered_json error_json(const std::string& code, const std::string& message);

/// Coefficient names used in tables: l, j, l2, lj, j2.
const std::vector<std::pair<std::string, std::pair<int, int>>>& taylor_terms();

// Minimal SVG canvas in data coordinates (y up).
class Svg {
 public:
  Svg(double x0, double x1, double y0, double y1, int width = 640);
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style);
  void line(double xa, double ya, double xb, double yb, const std::string& style);
  void dot(double x, double y, double r, const std::string& fill);
  void text(double x, double y, const std::string& s);
  std::string str() const;

 private:
  double px(double x) const;
  double py(double y) const;
  double x0_, x1_, y0_, y1_;
  int w_, h_;
  std::string body_;
};

/// Cut half-lines are dashed; `heights` places the marked points above the lower boundary.
void draw_polygon(Svg& svg, const semitoric::WeightedPolygon& p, const std::string& stroke,
                  const std::vector<double>& heights = {});

}  // namespace cli
