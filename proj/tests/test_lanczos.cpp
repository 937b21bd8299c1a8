#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/errors.hpp"
#include "slowmode/lanczos.hpp"
#include "slowmode/rng.hpp"
#include "slowmode/superham.hpp"

using namespace slowmode;

namespace {

SparseOperator random_psd(long n, std::uint64_t seed) {
  // banded random symmetric matrix, shifted to be PSD
  CounterRng rng(seed, 0);
  SparseOperator::Builder bld(n);
  for (long i = 0; i < n; ++i) {
    bld.add(i, i, 4.0 + rng.next_double());
    if (i + 1 < n) bld.add(i, i + 1, rng.next_double() - 0.5);
    if (i + 7 < n) bld.add(i, i + 7, rng.next_double() - 0.5);
  }
  return bld.assemble();
}

}  // namespace

TEST_CASE("matches the dense eigensolver on a random operator") {
  const auto op = random_psd(500, 42);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense());
  LanczosOptions opt;
  opt.nev = 4;
  const auto r = lowest_eigenpairs(op, opt);
  for (int i = 0; i < 4; ++i) {
    CHECK(r.values[i] == doctest::Approx(es.eigenvalues()[i]).epsilon(1e-10));
    CHECK(std::abs(std::abs(r.vectors.col(i).dot(es.eigenvectors().col(i))) - 1.0) < 1e-7);
  }
}

TEST_CASE("deflation removes a known eigenvector") {
  // tjz with boundary impurity: identity is the kernel; deflating it exposes the gap
  const int L = 5;
  const auto P = build_super_hamiltonian(SuperModel::TJz, L, SuperImpurity::state_flip({L}), 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P.dense());
  LanczosOptions opt;
  opt.nev = 1;
  opt.deflate = {state_identity(3, L)};
  const auto r = lowest_eigenpairs(P, opt);
  CHECK(r.values[0] == doctest::Approx(es.eigenvalues()[1]).epsilon(1e-8));
}

TEST_CASE("deterministic across repeated runs") {
  const auto op = random_psd(300, 7);
  LanczosOptions opt;
  opt.nev = 2;
  const auto a = lowest_eigenpairs(op, opt);
  const auto b = lowest_eigenpairs(op, opt);
  CHECK(a.values[0] == b.values[0]);
  CHECK(a.values[1] == b.values[1]);
  CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("residuals meet the tolerance") {
  const auto op = random_psd(800, 11);
  LanczosOptions opt;
  opt.nev = 3;
  opt.tol = 1e-11;
  const auto r = lowest_eigenpairs(op, opt);
  CHECK(r.converged);
  for (int i = 0; i < 3; ++i) CHECK(r.residuals[i] <= 1e-8 * op.norm_est());
}

TEST_CASE("throws on an impossible budget") {
  const auto op = random_psd(400, 3);
  LanczosOptions opt;
  opt.nev = 2;
  opt.max_basis = 8;
  opt.max_restarts = 0;
  opt.tol = 1e-14;
  CHECK_THROWS_AS(lowest_eigenpairs(op, opt), ConvergenceFailure);
}

TEST_CASE("row-parallel multiply is deterministic") {
  const auto op = random_psd(1000, 5);
  Eigen::VectorXd x(1000);
  CounterRng rng(1, 2);
  for (int i = 0; i < 1000; ++i) x[i] = rng.next_double();
  const Eigen::VectorXd y1 = op.multiply(x);
  const Eigen::VectorXd y2 = op.multiply(x);
  CHECK((y1 - y2).cwiseAbs().maxCoeff() == 0.0);
}
