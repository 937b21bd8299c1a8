#pragma once

namespace slowmode {

/// Parameters of the continuum solutions. D is a diffusion constant
/// (length^2/time) for the second-order equation and a subdiffusion constant
/// (length^4/time) for the fourth-order one; g is the impurity strength with
/// ell = D/g the impurity length scale.
struct ContinuumParams {
  double D = 1;
  double g = 0;
  double x = 0;
  double x0 = 0;
  double xs = 0;  // sink position (infinite-line geometry)
  double t = 0;

  double ell() const;
};

/// Diffusion kernel on the infinite line.
double gaussian_kernel(double dx, double D, double t);
/// Reflective-boundary solution on [0, inf), source at x0 > 0.
double diffusion_reflective(double x, double x0, double D, double t);
/// Absorbing-boundary solution on [0, inf).
double diffusion_absorbing(double x, double x0, double D, double t);

/// Exact solution of diffusion with a delta sink of strength g at xs on the
/// infinite line. g = 0 reduces to the Gaussian kernel. At t = 0 returns the
/// delta-function indicator (+inf at x == x0, else 0).
double diffusion_with_sink(const ContinuumParams& p);

/// Exact solution on [0, inf) with the impurity at the boundary:
/// D dC/dx|_0 = g C(0). Requires x, x0 > 0.
double diffusion_boundary_impurity(const ContinuumParams& p);

/// Remaining total charge for the absorbing boundary: erf(x0 / sqrt(4 D t)).
double remaining_charge_absorbing(double x0, double D, double t);

enum class SubdiffusionGeometry {
  Infinite,              // (1/2pi) int dk e^{-Dk^4 t} cos(k(x-x0))
  SemiSymmetric,         // modes cos(kx) - sin(kx) + e^{-kx}
  SemiChargePreserving,  // modes sqrt(2) cos(kx)
  SemiFullyBreaking      // modes cos(kx) - sin(kx) - e^{-kx}
};

/// Mode-integral evaluation of the biharmonic kernel in the given geometry.
/// Absolute error target 1e-8 (Dt)^{-1/4}.
double subdiffusion_kernel(const ContinuumParams& p, SubdiffusionGeometry geometry);

/// int_0^xmax C dx and int_0^xmax x C dx by quadrature over the kernel.
double subdiffusion_total_charge(const ContinuumParams& p, SubdiffusionGeometry geometry,
                                 double xmax = 0);
double subdiffusion_center_of_mass(const ContinuumParams& p, SubdiffusionGeometry geometry,
                                   double xmax = 0);

}  // namespace slowmode
