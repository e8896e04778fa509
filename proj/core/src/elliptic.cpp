#include "semitoric/elliptic.hpp"

#include <boost/math/special_functions/ellint_rf.hpp>
#include <boost/math/special_functions/ellint_rj.hpp>
#include <cmath>
#include <string>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

void check_k2(double k2) {
  if (!(k2 >= 0.0 && k2 < 1.0)) {
    throw Error(ErrorCode::domain, "k2 must lie in [0,1), got " + std::to_string(k2));
  }
}

}  // namespace

double ellip_K(double k2) {
  check_k2(k2);
  return boost::math::ellint_rf(0.0, 1.0 - k2, 1.0);
}

double ellip_Pi(double n, double k2) {
  check_k2(k2);
  if (!(n < 1.0)) {
    throw Error(ErrorCode::separatrix_pole,
                "characteristic n >= 1 (pole on the integration path), n = " + std::to_string(n));
  }
  const double y = 1.0 - k2;
  const double rf = boost::math::ellint_rf(0.0, y, 1.0);
  if (n == 0.0) return rf;
  return rf + n / 3.0 * boost::math::ellint_rj(0.0, y, 1.0, 1.0 - n);
}

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    double an = 0.5 * (a + b);
    double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 1e-16 * an) return 0.5 * (an + bn);
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

}  // namespace semitoric
