#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/superham.hpp"
#include "slowmode/two_impurity.hpp"

using namespace slowmode;

TEST_CASE("kl_index is a bijection onto 0..L(L+1)/2-1") {
  const int L = 9;
  std::vector<int> seen(L * (L + 1) / 2, 0);
  for (int k = 1; k <= L; ++k)
    for (int l = k; l <= L; ++l) seen[kl_index(L, k, l)]++;
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("two-impurity effective operator equals the explicit projection") {
  // project V_1 + V_L onto the single-flip pattern states at small L
  const int L = 4;
  const auto P =
      build_super_hamiltonian(SuperModel::TJz, L, SuperImpurity::state_flip({1, L}), 1.0);
  const auto heff = build_heff_two_impurity(L);
  const auto dense = heff.dense();
  for (int k = 1; k <= L; ++k)
    for (int l = k; l <= L; ++l)
      for (int kp = 1; kp <= L; ++kp)
        for (int lp = kp; lp <= L; ++lp) {
          const double explicit_elem =
              state_kl_tjz(L, k, l).dot(P.multiply(state_kl_tjz(L, kp, lp)));
          CHECK(dense(kl_index(L, k, l), kl_index(L, kp, lp)) ==
                doctest::Approx(explicit_elem).epsilon(1e-11).scale(1.0));
        }
}

TEST_CASE("sliom hopping model approaches the stated bulk elements") {
  const int L = 300;
  const auto t = build_sliom_hopping(L);
  CHECK(t.diag[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
  for (int k = 2; k <= L / 2; ++k) CHECK(t.diag[k - 1] == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
  for (int k = 1; k <= L / 2; ++k) CHECK(t.off[k - 1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("sliom matrix elements against explicit vectors at small L") {
  const int L = 5;
  const auto P =
      build_super_hamiltonian(SuperModel::TJz, L, SuperImpurity::state_flip({1, L}), 1.0);
  const auto t = build_sliom_hopping(L);
  for (int k = 1; k <= L; ++k) {
    Eigen::VectorXd qk = state_qk_tjz(L, k);
    CHECK(rayleigh(P, qk) == doctest::Approx(t.diag[k - 1]).epsilon(1e-11));
    if (k < L) {
      Eigen::VectorXd qk1 = state_qk_tjz(L, k + 1);
      const double elem = qk1.dot(P.multiply(qk)) / (qk1.norm() * qk.norm());
      CHECK(elem == doctest::Approx(t.off[k - 1]).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("gaps scale and order correctly") {
  CHECK(sliom_hopping_gap(100) == doctest::Approx(9.44e-4).epsilon(0.01));
  const double g100 = sliom_hopping_gap(100), g400 = sliom_hopping_gap(400);
  CHECK(std::log(g100 / g400) / std::log(4.0) == doctest::Approx(2.0).epsilon(0.05));
  // H_eff includes couplings beyond the diagonal SLIOM subspace: lower minimum
  CHECK(heff_two_impurity_gap(60) <= sliom_hopping_gap(60));
}
