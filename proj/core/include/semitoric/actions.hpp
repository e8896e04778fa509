#pragma once

#include <functional>

#include "semitoric/reduced.hpp"

namespace semitoric {

enum class ActionRoute { quadrature, elliptic };

struct ActionValue {
  double value = 0.0;
  ActionRoute route = ActionRoute::quadrature;
  double est_error = 0.0;
};

/// Real-cycle action I(l,h) from the arccos form, by tanh-sinh quadrature.
/// The focus-focus value (0,0) is accepted.
ActionValue action_I(double s, double l, double h);

struct BasicIntegrals {
  double NA = 0.0;
  double NB_l = 0.0;
  double NB_4 = 0.0;
  double NB_2l = 0.0;
};

/// N_A = int dp/sqrt(P) and N_{B,eta} = int dp/((p-eta) sqrt(P)) over [zeta2, zeta3],
/// in Legendre form.
BasicIntegrals basic_integrals(const ReducedLevel& level);

/// int_{zeta2}^{zeta3} f(p)/sqrt(P(p)) dp by adaptive Gauss-Kronrod after the
/// substitution p = zeta2 + (zeta3 - zeta2) sin^2(theta).
double cycle_integral(const ReducedLevel& level, const std::function<double(double)>& f);

/// Reduced period T = 2 N_A.
double period_T(double s, double l, double h);
double period_T(const ReducedLevel& level);

/// Rotation number W = C^C + (s/2 N_A - (h-h_l)/2 N_{B,l} - (h-h_{2+l})/2 N_{B,2+l}) / pi.
double rotation_W(double s, double l, double h);
double rotation_W(const ReducedLevel& level);

/// Rational functions R_I and R_W of the elliptic route.
double R_I(double s, double l, double h, double p);
double R_W(double s, double l, double h, double p);

/// I from the elliptic route, C^B + (1/pi) int R_I dp/sqrt(P), via cycle_integral.
ActionValue action_I_elliptic(double s, double l, double h);

}  // namespace semitoric
