#include "slowmode/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slowmode/erfcx.hpp"
#include "slowmode/errors.hpp"
#include "slowmode/quadrature.hpp"

namespace slowmode {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ContinuumParams::ell() const {
  if (g <= 0) throw DomainError("ell requires g > 0");
  return D / g;
}

double gaussian_kernel(double dx, double D, double t) {
  return std::exp(-dx * dx / (4 * D * t)) / std::sqrt(4 * kPi * D * t);
}

double diffusion_reflective(double x, double x0, double D, double t) {
  return gaussian_kernel(x - x0, D, t) + gaussian_kernel(x + x0, D, t);
}

double diffusion_absorbing(double x, double x0, double D, double t) {
  return gaussian_kernel(x - x0, D, t) - gaussian_kernel(x + x0, D, t);
}

double diffusion_with_sink(const ContinuumParams& p) {
  if (p.D <= 0 || p.t < 0 || p.g < 0) throw DomainError("need D > 0, t >= 0, g >= 0");
  if (p.t == 0)
    return p.x == p.x0 ? std::numeric_limits<double>::infinity() : 0.0;
  const double free_part = gaussian_kernel(p.x - p.x0, p.D, p.t);
  if (p.g == 0) return free_part;
  const double ell = p.ell();
  const double path = std::abs(p.x - p.xs) + std::abs(p.xs - p.x0);
  const double sdt = std::sqrt(p.D * p.t);
  const double z = sdt / (2 * ell) + path / (2 * sdt);
  return free_part - std::exp(-path * path / (4 * p.D * p.t)) * erfcx(z) / (4 * ell);
}

double diffusion_boundary_impurity(const ContinuumParams& p) {
  if (p.x <= 0 || p.x0 <= 0) throw DomainError("semi-infinite geometry needs x, x0 > 0");
  if (p.D <= 0 || p.t <= 0 || p.g < 0) throw DomainError("need D > 0, t > 0, g >= 0");
  const double reflect = diffusion_reflective(p.x, p.x0, p.D, p.t);
  if (p.g == 0) return reflect;
  const double ell = p.ell();
  const double s = p.x + p.x0;
  const double sdt = std::sqrt(p.D * p.t);
  const double w = sdt / ell + s / (2 * sdt);
  return reflect - std::exp(-s * s / (4 * p.D * p.t)) * erfcx(w) / ell;
}

double remaining_charge_absorbing(double x0, double D, double t) {
  return std::erf(x0 / std::sqrt(4 * D * t));
}

namespace {

double mode_value(SubdiffusionGeometry geom, double k, double x) {
  switch (geom) {
    case SubdiffusionGeometry::Infinite: return std::cos(k * x);
    case SubdiffusionGeometry::SemiSymmetric:
      return std::cos(k * x) - std::sin(k * x) + std::exp(-k * x);
    case SubdiffusionGeometry::SemiChargePreserving:
      return std::sqrt(2.0) * std::cos(k * x);
    case SubdiffusionGeometry::SemiFullyBreaking:
      return std::cos(k * x) - std::sin(k * x) - std::exp(-k * x);
  }
  return 0;
}

}  // namespace

double subdiffusion_kernel(const ContinuumParams& p, SubdiffusionGeometry geometry) {
  if (p.D <= 0 || p.t <= 0) throw DomainError("need D > 0, t > 0");
  if (geometry != SubdiffusionGeometry::Infinite && (p.x < 0 || p.x0 < 0))
    throw DomainError("semi-infinite geometry needs x, x0 >= 0");
  const double dt4 = std::pow(p.D * p.t, 0.25);
  const double k_max = std::pow(42.0 / (p.D * p.t), 0.25);  // e^{-42} tail
  const double tol = 1e-9 / dt4;
  auto integrand = [&](double k) {
    const double damp = std::exp(-p.D * std::pow(k, 4) * p.t);
    if (geometry == SubdiffusionGeometry::Infinite)
      return damp * std::cos(k * (p.x - p.x0)) / kPi;
    return damp * mode_value(geometry, k, p.x) * mode_value(geometry, k, p.x0) / kPi;
  };
  // split at the oscillation scale so QAG sees resolved panels
  const double osc = std::max({std::abs(p.x), std::abs(p.x0), std::abs(p.x - p.x0)});
  double total = 0;
  if (osc * k_max > 2 * kPi) {
    const double dk = 2 * kPi / osc;
    double a = 0;
    while (a < k_max) {
      const double b = std::min(k_max, a + dk);
      total += integrate(integrand, a, b, tol * dk / k_max, 1e-10);
      a = b;
    }
  } else {
    total = integrate(integrand, 0, k_max, tol, 1e-10);
  }
  return total;
}

double subdiffusion_total_charge(const ContinuumParams& p, SubdiffusionGeometry geometry,
                                 double xmax) {
  const double dt4 = std::pow(p.D * p.t, 0.25);
  if (xmax <= 0) xmax = p.x0 + 14 * dt4;
  ContinuumParams q = p;
  auto f = [&](double x) {
    q.x = x;
    return subdiffusion_kernel(q, geometry);
  };
  return integrate(f, 0, xmax, 1e-8, 1e-7);
}

double subdiffusion_center_of_mass(const ContinuumParams& p, SubdiffusionGeometry geometry,
                                   double xmax) {
  const double dt4 = std::pow(p.D * p.t, 0.25);
  if (xmax <= 0) xmax = p.x0 + 16 * dt4;
  ContinuumParams q = p;
  auto f = [&](double x) {
    q.x = x;
    return x * subdiffusion_kernel(q, geometry);
  };
  return integrate(f, 0, xmax, 1e-8, 1e-7);
}

}  // namespace slowmode
