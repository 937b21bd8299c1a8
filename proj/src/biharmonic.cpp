#include "slowmode/biharmonic.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "slowmode/errors.hpp"
#include "slowmode/quadrature.hpp"

namespace slowmode {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Scaled quantization functions; all O(1) with simple roots.
double fn_symmetric(double kl) { return std::cos(kl) - 1.0 / std::cosh(kl); }
double fn_fully_breaking(double kl) { return std::cos(kl) + 1.0 / std::cosh(kl); }
double fn_charge_preserving(double kl) { return std::sin(kl) + std::cos(kl) * std::tanh(kl); }

double quantization_fn(BiharmonicBc bc, double kl) {
  switch (bc) {
    case BiharmonicBc::SymmetricQP: return fn_symmetric(kl);
    case BiharmonicBc::ChargePreserving: return fn_charge_preserving(kl);
    case BiharmonicBc::FullyBreaking: return fn_fully_breaking(kl);
  }
  return 0;
}

// root bracket for the n-th root (1-based) in units of kL
void bracket(BiharmonicBc bc, int n, double& lo, double& hi) {
  switch (bc) {
    case BiharmonicBc::SymmetricQP:
      lo = n * kPi;
      hi = (n + 1) * kPi;
      break;
    case BiharmonicBc::ChargePreserving:
      lo = (n - 0.5) * kPi;
      hi = n * kPi;
      break;
    case BiharmonicBc::FullyBreaking:
      lo = std::max(1e-8, (n - 1) * kPi);
      hi = n * kPi;
      break;
  }
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (flo * fhi > 0)
    throw RootFindFailure("no sign change in bracket [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0 || (hi - lo) < 1e-16 * hi) return mid;
    if (flo * fm < 0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int ModeFamily::zero_mode_count() const {
  switch (bc) {
    case BiharmonicBc::SymmetricQP: return 2;
    case BiharmonicBc::ChargePreserving: return 1;
    case BiharmonicBc::FullyBreaking: return 0;
  }
  return 0;
}

double ModeFamily::eval_raw(double kv, double x) const {
  const double kl = kv * L, kx = kv * x;
  const double s = std::sin(kx), c = std::cos(kx);
  const double r = std::exp(-kl);
  if (bc == BiharmonicBc::ChargePreserving) {
    // cos(kx) + cos(kL)/cosh(kL) * cosh(kx), via decaying exponentials
    const double hyper =
        std::cos(kl) * (std::exp(-kv * (L - x)) + std::exp(-kv * (L + x))) / (1 + r * r);
    return c + hyper;
  }
  if (bc == BiharmonicBc::SymmetricQP) {
    // cos + cosh + gamma (sin + sinh), gamma = (cos - cosh)/(sinh - sin) at kL;
    // cosh + gamma sinh rewritten with decaying exponentials only
    const double denom = 1 - r * r - 2 * r * std::sin(kl);  // (sinh - sin) 2 e^{-kL}
    const double gamma = (2 * r * std::cos(kl) - 1 - r * r) / denom;
    const double a_minus = (1 - (std::sin(kl) + std::cos(kl)) * r) / denom;  // (1 - gamma)/2
    const double b_plus = (std::cos(kl) - std::sin(kl) - r) / denom;  // e^{kL}(1+gamma)/2 scaled
    return c + gamma * s + std::exp(-kx) * a_minus + std::exp(-kv * (L - x)) * b_plus;
  }
  // fully breaking: cos - cosh + gamma (sin - sinh). The free right end fixes
  // gamma = (sin - sinh)/(cos + cosh) at kL (phi'' = phi''' = 0 there).
  const double denom = 1 + r * r + 2 * r * std::cos(kl);  // (cos + cosh) 2 e^{-kL}
  const double gamma = (2 * r * std::sin(kl) - 1 + r * r) / denom;
  const double a_minus = (1 + (std::cos(kl) - std::sin(kl)) * r) / denom;  // (1 - gamma)/2
  const double b_plus = (std::cos(kl) + std::sin(kl) + r) / denom;  // e^{kL}(1+gamma)/2 scaled
  return c + gamma * s - std::exp(-kx) * a_minus - std::exp(-kv * (L - x)) * b_plus;
}

double ModeFamily::eval(int n, double x) const {
  return norm[n] * eval_raw(k[n], x);
}

double ModeFamily::quantization_residual(int n) const {
  return quantization_fn(bc, k[n] * L);
}

double ModeFamily::correlation(double x, double x0, double D, double t) const {
  double acc = 0;
  switch (bc) {
    case BiharmonicBc::SymmetricQP:
      acc += 1.0 / L + (x - L / 2) * (x0 - L / 2) * 12.0 / (L * L * L);
      break;
    case BiharmonicBc::ChargePreserving:
      acc += 1.0 / L;
      break;
    case BiharmonicBc::FullyBreaking:
      break;
  }
  for (std::size_t n = 0; n < k.size(); ++n)
    acc += std::exp(-D * std::pow(k[n], 4) * t) * eval(static_cast<int>(n), x) *
           eval(static_cast<int>(n), x0);
  return acc;
}

ModeFamily biharmonic_modes(double L, BiharmonicBc bc, int n_modes) {
  if (L <= 0 || n_modes < 1) throw ValidationError("need L > 0 and n_modes >= 1");
  ModeFamily fam;
  fam.bc = bc;
  fam.L = L;
  for (int n = 1; n <= n_modes; ++n) {
    double lo, hi;
    bracket(bc, n, lo, hi);
    const double kl = bisect([&](double v) { return quantization_fn(bc, v); }, lo, hi);
    fam.k.push_back(kl / L);
  }
  for (int n = 0; n < n_modes; ++n) {
    const double kv = fam.k[n];
    const double nn = integrate(
        [&](double x) {
          const double v = fam.eval_raw(kv, x);
          return v * v;
        },
        0, L, 1e-12 * L, 1e-12);
    if (!(nn > 0)) throw RootFindFailure("mode normalization failed");
    fam.norm.push_back(1.0 / std::sqrt(nn));
  }
  return fam;
}

}  // namespace slowmode
