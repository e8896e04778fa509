#pragma once

#include <complex>

#include "semitoric/series.hpp"

namespace semitoric {

/// Circle enclosing zeta1, zeta2 and the pole p = l, excluding zeta3, zeta4, 4, 2+l.
struct ContourSpec {
  std::complex<double> center;
  double radius = 0.0;
  int nodes = 512;
};

struct ContourResult {
  double J = 0.0;
  double T_alpha = 0.0;
  double W_alpha = 0.0;
  ContourSpec spec;
};

/// radius_factor scales the distance from the centre to the nearest excluded point.
ContourResult vanishing_contour(double s, double l, double h, double radius_factor = 0.5);

enum class JRoute { contour, series };

/// Which prefactor to use for the quadratic part of the J series.
/// corrected: -8 s^2 (1-s)^2 / rho2^5. printed: 8 s^2 (1-s^2) / rho2^5.
enum class JSeriesVariant { corrected, printed };

/// Order-2 expansion of J in (l, h).
BivariateSeries j_series(double s, JSeriesVariant variant = JSeriesVariant::corrected);

double imaginary_action_J(double s, double l, double h, JRoute route = JRoute::contour);

struct ImaginaryPeriodRotation {
  double T_alpha = 0.0;
  double W_alpha = 0.0;
};

ImaginaryPeriodRotation imaginary_period_rotation(double s, double l, double h);

/// h = Z(l, j), obtained by inverting the J series.
BivariateSeries birkhoff_Z(double s, int order = 2, JSeriesVariant variant = JSeriesVariant::corrected);

/// Z in closed form: (j rho2 + l (2-s))/4 + (1-s)^2 s^2 (2 j l rho2 - 9 j^2 (2-3s) - 3 l^2 (2-3s))/(4 rho2^2).
BivariateSeries birkhoff_Z_closed(double s);

/// h solving J_contour(l, h) = j, by Newton iteration seeded with birkhoff_Z.
double birkhoff_Z_exact(double s, double l, double j);

}  // namespace semitoric
