#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace semitoric {

/// Parameter data of the family F_s = (L, H_s) on S^2 x S^2.
struct SystemParams {
  double s = 0.0;
  double rho1 = 0.0;
  std::optional<double> rho2;
  double s_minus = 0.0;
  double s_plus = 0.0;
  bool has_ff = false;
};

double s_minus();
double s_plus();
/// 32 s^4 - 64 s^3 + 23 s^2 + 12 s - 4, whose roots in [0,1] are s_minus and s_plus.
double transition_quartic(double s);
double rho1_squared(double s);
double rho2_squared(double s);

SystemParams params(double s);

struct CartesianPoint {
  double x1, y1, z1, x2, y2, z2;
};

/// Chart q1 = -theta1, p1 = z1 + 2 z2, q2 = theta1 - theta2, p2 = 2 (1 + z2).
struct ChartPoint {
  double q1, p1, q2, p2;
};

struct MomentumValue {
  double L;
  double H;
};

MomentumValue momentum_map(const CartesianPoint& pt, double s);
MomentumValue momentum_map(const ChartPoint& pt, double s);

ChartPoint to_chart(const CartesianPoint& pt);
CartesianPoint from_chart(const ChartPoint& pt);

/// Shifted level variable: m1 sits at l = 0.
inline double shifted_l(double L) { return L + 1.0; }
inline double polygon_L(double l) { return l - 1.0; }
/// h measured from the value of H at N x S.
inline double shifted_h(double H, double s) { return H - (1.0 - 2.0 * s); }

enum class FixedPointType { elliptic_elliptic, focus_focus };

struct FixedPoint {
  std::string name;
  FixedPointType type;
  std::array<std::complex<double>, 4> eigenvalues;
};

/// Rank-zero points N x N, N x S, S x N, S x S with their Williamson type.
std::vector<FixedPoint> classify_fixed_points(double s);

}  // namespace semitoric
