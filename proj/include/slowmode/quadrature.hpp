#pragma once

#include <functional>

namespace slowmode {

/// Adaptive quadrature of f over [a, b] (GSL QAG, 61-point rule).
/// Throws QuadratureFailure with the achieved error when tolerances
/// cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-10);

/// Adaptive quadrature over [a, inf).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol = 1e-10, double rel_tol = 1e-10);

}  // namespace slowmode
