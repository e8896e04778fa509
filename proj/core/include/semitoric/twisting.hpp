#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "semitoric/polygons.hpp"
#include "semitoric/taylor.hpp"

namespace semitoric {

inline constexpr double kXiTailTolerance = 0.1;

struct XiValue {
  double xi = 0.0;
  double l_local = 0.0;
  double j = 0.0;
  double tail = 0.0;  // size estimate of the neglected terms
  bool valid = false;
};

/// Preferred local action at (l, h) in shifted variables, with z = l' + i J_r(l', h').
/// Uses the order-2 series for J and the from_partials Taylor coefficients.
XiValue preferred_action_xi_eval(double s, int ff_index, double l, double h);

/// As above; throws a range error when the point is outside the validity window.
double preferred_action_xi(double s, int ff_index, double l, double h);

struct GridSpec {
  int n_q1 = 1;
  int n_p1 = 151;
  int n_q2 = 40;
  int n_p2 = 64;
  long long size() const { return 1LL * n_q1 * n_p1 * n_q2 * n_p2; }
};

struct CloudPoint {
  double L = 0.0;
  double H = 0.0;
  double Xi = 0.0;
  bool valid = false;
};

struct ImageCloud {
  int ff_index = 1;
  std::pair<double, double> l_window;
  std::vector<CloudPoint> points;  // phase points inside the chart, valid or not
  long long sampled = 0;
  long long outside_chart = 0;
  long long n_valid() const;
};

ImageCloud sample_privileged_image(double s, int ff_index, const GridSpec& grid = {});

struct MatchResult {
  int best = -1;
  int kappa = 0;  // label of the best candidate at this cloud's cut
  double margin = 0.0;
  double best_translation = 0.0;
  std::vector<double> scores;
};

/// Envelope matching modulo one vertical translation per candidate.
/// Throws ambiguous_match when the margin is below min_margin.
MatchResult match_polygon(const ImageCloud& cloud, const std::vector<WeightedPolygon>& candidates,
                          double bin_width = 0.05, double min_margin = 4.0);

/// T^k(down_down_zero) for k = -3..3.
std::vector<WeightedPolygon> twist_candidates(double s);

struct TwistResult {
  std::array<int, 2> kappa_down{};     // labels of down_down_zero from matching
  std::array<int, 2> kappa_theorem{};  // transported to the theorem rep
  std::array<double, 2> margin{};
  std::array<double, 2> translation{};
};

TwistResult twisting_index(double s, const GridSpec& grid = {});

/// Least-squares slope in l' of I_Delta - xi along the horizontal line through m_r,
/// with I_Delta the polygon action of the down_down_zero rep.
double action_gap_slope(double s, int ff_index, double half_width = 0.1, int samples = 10);

/// Twisting label implied by a Taylor series of the form S_pref + 2 pi k l.
int taylor_shift_kappa(const TaylorInvariant& series);

struct InvariantReport {
  double s = 0.0;
  int n_ff = 0;
  std::vector<std::pair<std::string, WeightedPolygon>> polygons;
  std::optional<Heights> heights;
  std::optional<std::pair<TaylorInvariant, TaylorInvariant>> taylor;
  std::optional<TwistResult> twist;
  std::optional<double> twist_margin;
  std::optional<bool> s_independent;  // labels equal those at s = 1/2
};

InvariantReport full_invariants(double s, const GridSpec& grid = {}, bool check_s_independence = true);

}  // namespace semitoric
