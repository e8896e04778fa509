#pragma once

#include <array>
#include <optional>

namespace semitoric {

/// Separatrix levels of the reduced system at fixed l (shifted convention).
struct SeparatrixLevels {
  double h0 = 0, hl = 0, h4 = 0, h2l = 0;
  double l_minus = 0, l_plus = 0;
  double l = 0;

  /// h_{l^-}: h0 for l <= 0, otherwise h_l.
  double h_lminus() const { return l <= 0.0 ? h0 : hl; }
  /// h_{l^+}: h_{2+l} for l <= 2, otherwise h4.
  double h_lplus() const { return l <= 2.0 ? h2l : h4; }
};

SeparatrixLevels separatrix_levels(double s, double l);

double reduced_A(double s, double l, double p2);
double reduced_B(double s, double l, double p2);

/// A(p2) + cos(q2) sqrt(B(p2)).
double reduced_hamiltonian(double s, double l, double q2, double p2);

/// Coefficients c0..c4 (ascending) of P(p) = B(p) - (h + (1-2s) - A(p))^2.
std::array<double, 5> quartic_coefficients(double s, double l, double h);
double quartic_eval(const std::array<double, 5>& c, double p);

enum class CurveType { I, II, III };
const char* to_string(CurveType t);

struct CurveClass {
  CurveType type;
  double cA, cB, cC;
};

struct ReducedLevel {
  double s = 0, l = 0, h = 0;
  std::array<double, 4> roots{};  // ascending
  double lead = 0;                // leading coefficient s^2 (1-s)^2
  double k2 = 0;                  // Legendre parameter of the real cycle
  // Characteristics of the third-kind integrals for the poles p = l, 4, 2+l.
  double n_l = 0, n_4 = 0, n_2l = 0;
  SeparatrixLevels sep;
  std::optional<CurveClass> curve;  // absent within tau_type of a separatrix
};

inline constexpr double kTauType = 1e-9;

/// Ordered roots of P with Legendre data; the curve class is filled when defined.
ReducedLevel quartic_roots(double s, double l, double h);

/// Curve type and the correction constants C^A, C^B, C^C.
CurveClass classify_curve(double s, double l, double h);
CurveClass classify_curve(const ReducedLevel& level);

/// Characteristic for the third-kind integral with pole eta (see actions).
double legendre_characteristic(const std::array<double, 4>& roots, double eta);

}  // namespace semitoric
