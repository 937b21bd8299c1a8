#include "slowmode/quadrature.hpp"

#include <cmath>
#include <memory>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

double call_target(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

struct GslGuard {
  gsl_error_handler_t* old = nullptr;
  GslGuard() { old = gsl_set_error_handler_off(); }
  ~GslGuard() { gsl_set_error_handler(old); }
};

constexpr std::size_t kWorkspaceSize = 8192;

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol) {
  GslGuard guard;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(kWorkspaceSize), gsl_integration_workspace_free);
  gsl_function gf;
  gf.function = &call_target;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  double result = 0, abserr = 0;
  int status = gsl_integration_qag(&gf, a, b, abs_tol, rel_tol, kWorkspaceSize,
                                   GSL_INTEG_GAUSS61, ws.get(), &result, &abserr);
  if (status == GSL_EROUND || status == GSL_ETOL) {
    // fall back to the singular-friendly rule before giving up
    status = gsl_integration_qags(&gf, a, b, abs_tol, rel_tol, kWorkspaceSize, ws.get(), &result,
                                  &abserr);
  }
  if (status != 0 && abserr > 10 * abs_tol && abserr > 10 * rel_tol * std::abs(result))
    throw QuadratureFailure("quadrature failed, achieved error " + std::to_string(abserr));
  return result;
}

double integrate_to_inf(const std::function<double(double)>& f, double a, double abs_tol,
                        double rel_tol) {
  GslGuard guard;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(kWorkspaceSize), gsl_integration_workspace_free);
  gsl_function gf;
  gf.function = &call_target;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  double result = 0, abserr = 0;
  int status = gsl_integration_qagiu(&gf, a, abs_tol, rel_tol, kWorkspaceSize, ws.get(), &result,
                                     &abserr);
  if (status != 0 && abserr > 10 * abs_tol && abserr > 10 * rel_tol * std::abs(result))
    throw QuadratureFailure("quadrature failed, achieved error " + std::to_string(abserr));
  return result;
}

}  // namespace slowmode
