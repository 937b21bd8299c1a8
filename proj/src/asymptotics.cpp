#include "slowmode/asymptotics.hpp"

#include <cmath>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kGamma14 = std::tgamma(0.25);
const double kGamma34 = std::tgamma(0.75);
const double kGamma54 = std::tgamma(1.25);

std::string key(const std::string& s, const std::string& i, const std::string& r) {
  return s + "/" + i + "/" + r;
}

}  // namespace

double AsymptoticLaw::value(const ContinuumParams& p) const {
  const std::string k = key(symmetry, impurity, regime);
  const double Dt = p.D * p.t;
  if (k == "u1/none/bulk_autocorr") return 1.0 / std::sqrt(4 * kPi * Dt);
  if (k == "u1/none/boundary_autocorr") return 1.0 / std::sqrt(kPi * Dt);
  if (k == "u1/bulk_sink/early_autocorr") return 1.0 / std::sqrt(4 * kPi * Dt);
  if (k == "u1/bulk_sink/intermediate_weak")
    return 1.0 / std::sqrt(4 * kPi * Dt) - 1.0 / (4 * p.ell());
  if (k == "u1/bulk_sink/late_same_side")
    return (p.x * p.x0 + (std::abs(p.x) + std::abs(p.x0)) * p.ell()) /
           (std::sqrt(4 * kPi) * std::pow(Dt, 1.5));
  if (k == "u1/bulk_sink/late_opposite_side")
    return (std::abs(p.x) + std::abs(p.x0)) * p.ell() / (std::sqrt(4 * kPi) * std::pow(Dt, 1.5));
  if (k == "u1/boundary_sink/late_autocorr")
    return p.x * p.x0 / (2 * std::sqrt(kPi) * std::pow(Dt, 1.5));
  if (k == "u1/boundary_sink/total_charge") return p.x0 / std::sqrt(kPi * Dt);
  if (k == "dipole/none/bulk_autocorr") return kGamma14 / (4 * kPi * std::pow(Dt, 0.25));
  if (k == "dipole/none/boundary_autocorr") return kGamma14 / (kPi * std::pow(Dt, 0.25));
  if (k == "dipole/charge_preserving/late_autocorr")
    return kGamma14 / (2 * kPi * std::pow(Dt, 0.25));
  if (k == "dipole/charge_preserving/dipole_leak_rate")
    return p.D * kGamma34 / (2 * kPi * std::pow(Dt, 0.75));
  if (k == "dipole/charge_preserving/center_of_mass_growth")
    return 2 * kGamma34 * std::pow(Dt, 0.25) / kPi;
  if (k == "dipole/full_breaking/late_autocorr")
    return kGamma54 * p.x * p.x * p.x0 * p.x0 / (4 * kPi * std::pow(Dt, 1.25));
  if (k == "dipole/full_breaking/total_charge")
    return p.x0 * p.x0 / (2 * std::sqrt(kPi) * std::sqrt(Dt));
  if (k == "dipole/full_breaking/center_of_mass")
    return p.x0 * p.x0 * kGamma14 / (2 * kPi * std::pow(Dt, 0.25));
  throw UnknownRegime("no such regime: " + k);
}

double AsymptoticLaw::amplitude(const ContinuumParams& p) const {
  return value(p) * std::pow(p.t, -exponent);
}

const std::vector<AsymptoticLaw>& asymptotic_catalogue() {
  static const std::vector<AsymptoticLaw> laws = {
      {"u1", "none", "bulk_autocorr", -0.5, "1/sqrt(4 pi D t)", true},
      {"u1", "none", "boundary_autocorr", -0.5, "1/sqrt(pi D t)", true},
      {"u1", "bulk_sink", "early_autocorr", -0.5, "1/sqrt(4 pi D t)", true},
      {"u1", "bulk_sink", "intermediate_weak", -0.5, "1/sqrt(4 pi D t) - 1/(4 ell)", true},
      {"u1", "bulk_sink", "late_same_side", -1.5,
       "[x x0 + (|x|+|x0|) ell] / (sqrt(4 pi) (D t)^{3/2})", true},
      {"u1", "bulk_sink", "late_opposite_side", -1.5,
       "(|x|+|x0|) ell / (sqrt(4 pi) (D t)^{3/2})", true},
      {"u1", "boundary_sink", "late_autocorr", -1.5,
       "x x0 / (2 sqrt(pi) (D t)^{3/2}),  x,x0 >> ell", true},
      {"u1", "boundary_sink", "total_charge", -0.5, "x0 / sqrt(pi D t)", true},
      {"dipole", "none", "bulk_autocorr", -0.25, "Gamma(1/4) / (4 pi (D t)^{1/4})", true},
      {"dipole", "none", "boundary_autocorr", -0.25, "Gamma(1/4) / (pi (D t)^{1/4})", true},
      {"dipole", "charge_preserving", "late_autocorr", -0.25,
       "Gamma(1/4) / (2 pi (D t)^{1/4})", true},
      {"dipole", "charge_preserving", "dipole_leak_rate", -0.75,
       "D Gamma(3/4) / (2 pi (D t)^{3/4})", true},
      {"dipole", "charge_preserving", "center_of_mass_growth", 0.25,
       "2 Gamma(3/4) (D t)^{1/4} / pi", true},
      {"dipole", "full_breaking", "late_autocorr", -1.25,
       "Gamma(5/4) x^2 x0^2 / (4 pi (D t)^{5/4})", true},
      {"dipole", "full_breaking", "total_charge", -0.5, "x0^2 / (2 sqrt(pi) (D t)^{1/2})", false},
      {"dipole", "full_breaking", "center_of_mass", -0.25,
       "x0^2 Gamma(1/4) / (2 pi (D t)^{1/4})", false},
  };
  return laws;
}

const AsymptoticLaw& asymptotic_law(const RegimeSpec& spec) {
  for (const auto& law : asymptotic_catalogue())
    if (law.symmetry == spec.symmetry && law.impurity == spec.impurity &&
        law.regime == spec.regime)
      return law;
  throw UnknownRegime("no such regime: " + key(spec.symmetry, spec.impurity, spec.regime));
}

RgFlow rg_dimension(int d) {
  if (d < 1 || d > 3) throw ValidationError("dimension must be 1, 2 or 3");
  RgFlow flow;
  flow.dimension = d;
  flow.coefficient = 2.0 - d;
  flow.classification = d == 1 ? "relevant" : (d == 2 ? "marginal" : "irrelevant");
  return flow;
}

}  // namespace slowmode
