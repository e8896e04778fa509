#pragma once

namespace semitoric {

/// Complete elliptic integral of the first kind, parameter k2 = k^2 in [0,1).
double ellip_K(double k2);

/// Complete elliptic integral of the third kind
/// Pi(n,k) = int_0^1 dx / ((1 - n x^2) sqrt((1 - x^2)(1 - k^2 x^2))), n < 1.
double ellip_Pi(double n, double k2);

/// Arithmetic-geometric mean.
double agm(double a, double b);

}  // namespace semitoric
