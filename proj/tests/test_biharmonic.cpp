#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/biharmonic.hpp"
#include "slowmode/errors.hpp"
#include "slowmode/quadrature.hpp"

using namespace slowmode;

TEST_CASE("symmetric roots match the tabulated values") {
  const auto fam = biharmonic_modes(1.0, BiharmonicBc::SymmetricQP, 4);
  CHECK(fam.k[0] / M_PI == doctest::Approx(1.50562).epsilon(1e-5));
  CHECK(fam.k[1] / M_PI == doctest::Approx(2.49975).epsilon(1e-5));
  CHECK(fam.k[2] / M_PI == doctest::Approx(3.50001).epsilon(1e-5));
}

TEST_CASE("quantization residuals are at scale") {
  for (auto bc :
       {BiharmonicBc::SymmetricQP, BiharmonicBc::ChargePreserving, BiharmonicBc::FullyBreaking}) {
    const auto fam = biharmonic_modes(57.0, bc, 8);
    for (int n = 0; n < 8; ++n) CHECK(std::abs(fam.quantization_residual(n)) <= 1e-10);
  }
}

TEST_CASE("asymptotic root spacing") {
  // accuracy O(e^{-k_n L}) of the asymptotic spacing
  const auto fam = biharmonic_modes(1.0, BiharmonicBc::SymmetricQP, 10);
  for (int n = 4; n < 10; ++n)
    CHECK(fam.k[n] == doctest::Approx((n + 1.5) * M_PI).epsilon(1e-5));
  const auto fb = biharmonic_modes(1.0, BiharmonicBc::FullyBreaking, 10);
  for (int n = 4; n < 10; ++n)
    CHECK(fb.k[n] == doctest::Approx((n + 0.5) * M_PI).epsilon(1e-5));
  const auto cp = biharmonic_modes(1.0, BiharmonicBc::ChargePreserving, 10);
  for (int n = 4; n < 10; ++n)
    CHECK(cp.k[n] == doctest::Approx((n + 0.75) * M_PI).epsilon(1e-5));
}

TEST_CASE("modes are orthonormal on [0, L] by quadrature") {
  const double L = 13.0;
  for (auto bc :
       {BiharmonicBc::SymmetricQP, BiharmonicBc::ChargePreserving, BiharmonicBc::FullyBreaking}) {
    const auto fam = biharmonic_modes(L, bc, 5);
    for (int a = 0; a < 5; ++a)
      for (int b = a; b < 5; ++b) {
        const double dot = integrate(
            [&](double x) { return fam.eval(a, x) * fam.eval(b, x); }, 0, L, 1e-10, 1e-10);
        CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-6).scale(1.0));
      }
  }
}

TEST_CASE("boundary conditions hold for each family") {
  const double L = 31.0, h = 1e-4;
  {
    const auto fam = biharmonic_modes(L, BiharmonicBc::FullyBreaking, 3);
    for (int n = 0; n < 3; ++n) {
      CHECK(std::abs(fam.eval(n, 0.0)) < 1e-9);  // pinned
      CHECK(std::abs(fam.eval(n, h) - fam.eval(n, -0.0)) / h <
            1e-3 * fam.k[n]);  // flat: first derivative vanishes
    }
  }
  {
    const auto fam = biharmonic_modes(L, BiharmonicBc::ChargePreserving, 3);
    for (int n = 0; n < 3; ++n)
      CHECK(std::abs(fam.eval(n, h) - fam.eval(n, 0.0)) / h < 1e-3 * fam.k[n]);
  }
  {
    // symmetric family: second and third derivatives vanish at x=0
    const auto fam = biharmonic_modes(L, BiharmonicBc::SymmetricQP, 3);
    for (int n = 0; n < 3; ++n) {
      const double d2 =
          (fam.eval(n, 2 * h) - 2 * fam.eval(n, h) + fam.eval(n, 0.0)) / (h * h);
      CHECK(std::abs(d2) < 1e-2 * fam.k[n] * fam.k[n]);
    }
  }
}

TEST_CASE("zero-mode counts per family") {
  CHECK(biharmonic_modes(5.0, BiharmonicBc::SymmetricQP, 1).zero_mode_count() == 2);
  CHECK(biharmonic_modes(5.0, BiharmonicBc::ChargePreserving, 1).zero_mode_count() == 1);
  CHECK(biharmonic_modes(5.0, BiharmonicBc::FullyBreaking, 1).zero_mode_count() == 0);
}

TEST_CASE("stable evaluation at large kL") {
  // naive cos+cosh would overflow; the mode stays O(1/sqrt(L))
  const auto fam = biharmonic_modes(3000.0, BiharmonicBc::SymmetricQP, 12);
  for (double x : {0.0, 1.0, 1500.0, 2999.0})
    CHECK(std::abs(fam.eval(11, x)) < 1.0);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(biharmonic_modes(-1.0, BiharmonicBc::SymmetricQP, 3), ValidationError);
  CHECK_THROWS_AS(biharmonic_modes(1.0, BiharmonicBc::SymmetricQP, 0), ValidationError);
}
