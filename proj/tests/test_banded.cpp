#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/banded.hpp"
#include "slowmode/eigensolve.hpp"
#include "slowmode/errors.hpp"

using namespace slowmode;

TEST_CASE("u1 PBC L=4 spectrum is {0, 16, 16, 32}") {
  const auto e = eigh_values(build_u1(4, Bc::Pbc));
  CHECK(e[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e[1] == doctest::Approx(16.0));
  CHECK(e[2] == doctest::Approx(16.0));
  CHECK(e[3] == doctest::Approx(32.0));
}

TEST_CASE("uniform vector is an exact zero mode at g=0") {
  for (auto bc : {Bc::Obc, Bc::Pbc}) {
    const auto h = build_u1(12, bc);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(12);
    CHECK(h.multiply(ones).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("u1 OBC rows: bulk 16, edges 8, impurity adds 4g") {
  const auto h = build_u1(6, Bc::Obc, U1Impurity{1, 0.75});
  const auto d = h.dense();
  CHECK(d(0, 0) == doctest::Approx(8.0 + 3.0));
  CHECK(d(1, 1) == doctest::Approx(16.0));
  CHECK(d(5, 5) == doctest::Approx(8.0));
  CHECK(d(2, 3) == doctest::Approx(-8.0));
  CHECK(d(0, 5) == 0.0);
}

TEST_CASE("bulk diffusion recursion: -(H v) = 8 * second difference in the bulk") {
  const auto h = build_u1(64, Bc::Obc, U1Impurity{1, 1.0});
  Eigen::VectorXd v(64);
  for (int j = 0; j < 64; ++j) v[j] = std::sin(0.3 * j) + 0.1 * j;
  const Eigen::VectorXd hv = h.multiply(v);
  for (int j = 2; j < 62; ++j) {
    const double lap = v[j - 1] + v[j + 1] - 2 * v[j];
    CHECK(std::abs(-hv[j] - 8.0 * lap) < 1e-10);
  }
}

TEST_CASE("dipole bulk rows match the 4- and 5-local stencils") {
  const double J4 = 1.0, J5 = 1.0 / std::sqrt(2.0);
  const auto h = build_dipole(20, J4, J5);
  const auto d = h.dense();
  const int j = 9;  // deep bulk
  CHECK(d(j, j) == doctest::Approx(4 * J4 + 4 * J5));
  CHECK(d(j, j + 1) == doctest::Approx(-J4 - 2 * J5));
  CHECK(d(j, j + 2) == doctest::Approx(-2 * J4 + J5));
  CHECK(d(j, j + 3) == doctest::Approx(J4 - 2 * J5));
  CHECK(d(j, j + 4) == doctest::Approx(J5));
}

TEST_CASE("dipole left-edge rows agree with the truncated-window expansion") {
  // row of |1): J4 [ |1)-|2)-|3)+|4) ] + J5 [ |1)-|2)-|4)+|5) ]
  const double J4 = 2.0, J5 = 0.5;
  const auto d = build_dipole(16, J4, J5).dense();
  CHECK(d(0, 0) == doctest::Approx(J4 + J5));
  CHECK(d(0, 1) == doctest::Approx(-J4 - J5));
  CHECK(d(0, 2) == doctest::Approx(-J4));
  CHECK(d(0, 3) == doctest::Approx(J4 - J5));
  CHECK(d(0, 4) == doctest::Approx(J5));
  // row of |2): -|1) + 2|2) - 2|4) + |5) (J4 part) and -|1)+2|2)-|3)+|4)-2|5)+|6) (J5)
  CHECK(d(1, 1) == doctest::Approx(2 * J4 + 2 * J5));
  CHECK(d(1, 2) == doctest::Approx(0.0 - J5));
  CHECK(d(1, 3) == doctest::Approx(-2 * J4 + J5));
  CHECK(d(1, 4) == doctest::Approx(J4 - 2 * J5));
  CHECK(d(1, 5) == doctest::Approx(J5));
}

TEST_CASE("dipole zero modes: uniform and linear at g=0; swap keeps charge only") {
  const int L = 40;
  const auto h0 = build_dipole(L);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(L), lin(L);
  for (int j = 0; j < L; ++j) lin[j] = j + 1;
  CHECK(h0.multiply(ones).cwiseAbs().maxCoeff() < 1e-11);
  CHECK(h0.multiply(lin).cwiseAbs().maxCoeff() < 1e-10);

  const auto hs = build_dipole(L, 1.0, 0.7, {DipoleImpurity::Kind::ChargePreservingSwap, 1.3});
  CHECK(hs.multiply(ones).cwiseAbs().maxCoeff() < 1e-11);
  CHECK(hs.multiply(lin).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("zero-mode bookkeeping across impurity kinds") {
  const int L = 200;
  auto count_zero = [](const BandedOperator& h) {
    const auto e = eigh_values(h);
    const double tol = 1e-9 * h.norm_est();
    int n = 0;
    for (int i = 0; i < e.size(); ++i)
      if (std::abs(e[i]) <= tol) ++n;
    return n;
  };
  CHECK(count_zero(build_u1(L, Bc::Obc)) == 1);
  CHECK(count_zero(build_u1(L, Bc::Obc, U1Impurity{1, 1.0})) == 0);
  CHECK(count_zero(build_dipole(L)) == 2);
  CHECK(count_zero(build_dipole(L, 1.0, 0.707,
                                {DipoleImpurity::Kind::ChargePreservingSwap, 1.0})) == 1);
  CHECK(count_zero(build_dipole(L, 1.0, 0.707, {DipoleImpurity::Kind::FullBreaking, 1.0})) == 0);
}

TEST_CASE("operators are positive semi-definite") {
  for (const auto& h :
       {build_u1(150, Bc::Obc, U1Impurity{3, 2.0}),
        build_dipole(150, 1.0, 0.7, {DipoleImpurity::Kind::FullBreaking, 0.5})}) {
    const auto e = eigh_values(h);
    CHECK(e[0] >= -1e-10 * h.norm_est());
  }
}

TEST_CASE("impurity-gap scaling: lowest eigenvalue fits c L^-2") {
  std::vector<double> Ls = {400, 800, 1600}, e1;
  for (double L : Ls)
    e1.push_back(eigh_values(build_u1(static_cast<int>(L), Bc::Obc, U1Impurity{1, 1.0}))[0]);
  const double z = std::log(e1[0] / e1[2]) / std::log(Ls[2] / Ls[0]);
  CHECK(z == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("span and validation errors") {
  CHECK_THROWS_AS(build_dipole(7), SpanError);
  CHECK_THROWS_AS(build_u1(1, Bc::Obc), SpanError);
  CHECK_THROWS_AS(build_u1(8, Bc::Obc, U1Impurity{9, 1.0}), ValidationError);
}
