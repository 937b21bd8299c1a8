#pragma once

#include <vector>

#include <Eigen/Dense>

namespace slowmode {

/// Boundary-condition family of the biharmonic eigenproblem
/// d^4 phi / dx^4 = k^4 phi on [0, L].
///
/// SymmetricQP:       phi'' = phi''' = 0 at both ends (charge and dipole
///                    preserved);    cos(kL) cosh(kL) = +1
/// ChargePreserving:  phi' = phi''' = 0 at x=0, free end at x=L;
///                    tan(kL) + tanh(kL) = 0
/// FullyBreaking:     phi = phi' = 0 at x=0, free end at x=L;
///                    cos(kL) cosh(kL) = -1
enum class BiharmonicBc { SymmetricQP, ChargePreserving, FullyBreaking };

struct ModeFamily {
  BiharmonicBc bc;
  double L = 0;
  std::vector<double> k;     // positive roots, ascending
  std::vector<double> norm;  // 1/sqrt(int_0^L phi_raw^2)

  int zero_mode_count() const;  // 2 (span{1,x}) / 1 (span{1}) / 0

  /// Normalized n-th mode at x (0-based n). Evaluated through decaying
  /// exponentials only; safe for kL up to hundreds.
  double eval(int n, double x) const;
  double eval_raw(double k, double x) const;

  /// Scaled quantization residual of root n (O(1) formulation, not the
  /// overflowing cos*cosh product).
  double quantization_residual(int n) const;

  /// Spectral sum over modes incl. zero modes: sum_n e^{-D k_n^4 t} phi phi.
  double correlation(double x, double x0, double D, double t) const;
};

ModeFamily biharmonic_modes(double L, BiharmonicBc bc, int n_modes);

}  // namespace slowmode
