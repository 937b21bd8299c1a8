#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/asymptotics.hpp"
#include "slowmode/errors.hpp"

using namespace slowmode;

TEST_CASE("rg dimension of the localized potential") {
  CHECK(rg_dimension(1).coefficient == doctest::Approx(1.0));
  CHECK(rg_dimension(1).classification == "relevant");
  CHECK(rg_dimension(2).coefficient == doctest::Approx(0.0));
  CHECK(rg_dimension(2).classification == "marginal");
  CHECK(rg_dimension(3).coefficient == doctest::Approx(-1.0));
  CHECK(rg_dimension(3).classification == "irrelevant");
  CHECK_THROWS_AS(rg_dimension(4), ValidationError);
}

TEST_CASE("catalogue lookup and unknown regimes") {
  const auto& law = asymptotic_law({"u1", "none", "bulk_autocorr"});
  CHECK(law.exponent == doctest::Approx(-0.5));
  ContinuumParams p;
  p.D = 2.0;
  p.t = 9.0;
  CHECK(law.value(p) == doctest::Approx(1.0 / std::sqrt(4 * M_PI * 18.0)));
  CHECK(law.amplitude(p) == doctest::Approx(1.0 / std::sqrt(4 * M_PI * 2.0)));
  CHECK_THROWS_AS(asymptotic_law({"u1", "none", "nope"}), UnknownRegime);
}

TEST_CASE("boundary amplitudes are the stated multiples of the bulk") {
  ContinuumParams p;
  p.D = 1.0;
  p.t = 100.0;
  const double bulk = asymptotic_law({"dipole", "none", "bulk_autocorr"}).value(p);
  CHECK(asymptotic_law({"dipole", "none", "boundary_autocorr"}).value(p) ==
        doctest::Approx(4 * bulk));
  CHECK(asymptotic_law({"dipole", "charge_preserving", "late_autocorr"}).value(p) ==
        doctest::Approx(2 * bulk));
}

TEST_CASE("catalogue enumerates both symmetry classes") {
  int u1 = 0, dip = 0;
  for (const auto& law : asymptotic_catalogue()) {
    if (law.symmetry == "u1") ++u1;
    if (law.symmetry == "dipole") ++dip;
  }
  CHECK(u1 >= 6);
  CHECK(dip >= 6);
}
