#pragma once

#include <utility>

#include "semitoric/series.hpp"

namespace semitoric {

/// Order-2 Taylor series invariant at a focus-focus point, in (l, j).
struct TaylorInvariant {
  int ff_index = 1;
  BivariateSeries coeffs{2};
  bool window_ok = false;
};

struct SPartials {
  double dS_dl = 0.0;
  double dS_dj = 0.0;
};

/// dS/dl = 2 pi (W^alpha T / T^alpha - W) + arg w, dS/dj = 2 pi T / T^alpha + ln|w|,
/// with w = l + i j, h = Z(l,j), and arg w in (-3 pi/2, pi/2].
SPartials dS_partials(double s, double l, double j);

/// Coefficients at m1 recovered from dS_partials: linear terms by ray averages and
/// Richardson extrapolation, quadratic terms by a 5-point stencil.
TaylorInvariant taylor_coeffs_numeric(double s, double stencil = 5e-3);

/// theorem: coefficients as printed (l^2 and j^2 over 8 rho2^3 rho1^2).
/// from_partials: the l^2 and j^2 denominators implied by the partial derivatives
/// (32 rho2^3 rho1^2). The l, j and lj terms coincide.
enum class TaylorForm { theorem, from_partials };

TaylorInvariant taylor_coeffs_closed(double s, int ff_index = 1, TaylorForm form = TaylorForm::theorem);

/// eps2 S(eps1 l, eps2 j) + (1 - eps1)/2 pi l, renormalized into the window.
TaylorInvariant symmetry_transform(const TaylorInvariant& t, int eps1, int eps2);

/// Shift of the l coefficient by a multiple of 2 pi into [-pi/2, 3 pi/2).
std::pair<TaylorInvariant, int> normalize_representative(const TaylorInvariant& t);

/// The unique k with a + 2 pi k in [-pi/2, 3 pi/2).
int window_shift(double a);

}  // namespace semitoric
