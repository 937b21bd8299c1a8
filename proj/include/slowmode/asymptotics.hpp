#pragma once

#include <string>
#include <vector>

#include "slowmode/continuum.hpp"

namespace slowmode {

/// One late/early-time law: C (or charge / center of mass) ~ amplitude * t^exponent.
struct AsymptoticLaw {
  std::string symmetry;   // "u1" | "dipole"
  std::string impurity;   // "none" | "bulk_sink" | "boundary_sink" | "charge_preserving" | "full_breaking"
  std::string regime;     // regime key, see catalogue
  double exponent = 0;
  std::string amplitude_formula;  // human-readable closed form
  bool amplitude_exact = true;    // false: scaling statement only

  /// Numeric amplitude for concrete parameters (t-independent prefactor).
  double amplitude(const ContinuumParams& p) const;
  /// Full predicted value amplitude * (t or Dt)^exponent as defined per entry.
  double value(const ContinuumParams& p) const;
};

struct RegimeSpec {
  std::string symmetry;
  std::string impurity;
  std::string regime;
};

/// Entire validated catalogue.
const std::vector<AsymptoticLaw>& asymptotic_catalogue();

/// Lookup; throws UnknownRegime.
const AsymptoticLaw& asymptotic_law(const RegimeSpec& spec);

struct RgFlow {
  int dimension = 1;
  double coefficient = 0;  // 2 - d
  std::string classification;  // relevant / marginal / irrelevant
};

/// Tree-level scaling dimension of a localized potential against diffusion.
RgFlow rg_dimension(int d);

}  // namespace slowmode
