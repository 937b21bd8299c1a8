#pragma once

#include <cmath>
#include <limits>

namespace slowmode {

/**
 * Scaled complementary error function e^{z^2} erfc(z).
 *
 * Never formed as exp(z^2)*erfc(z) for large z (each factor over/underflows
 * around |z| ~ 27 while the product stays ~ 1/(z sqrt(pi))). For z > 5 the
 * Laplace continued fraction is used; below that the direct product is safe
 * and accurate.
 */
inline double erfcx(double z) {
  if (std::isnan(z)) return z;
  if (z < 0) {
    // erfcx(-z) = 2 e^{z^2} - erfcx(z); overflows for z < ~ -26.6
    const double e = 2.0 * std::exp(z * z);
    if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
    return e - erfcx(-z);
  }
  if (z <= 5.0) return std::exp(z * z) * std::erfc(z);
  // erfcx(z) = 1/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + ...)))))
  double cf = 0.0;
  for (int k = 40; k >= 1; --k) cf = (0.5 * k) / (z + cf);
  constexpr double inv_sqrt_pi = 0.5641895835477562869;
  return inv_sqrt_pi / (z + cf);
}

}  // namespace slowmode
