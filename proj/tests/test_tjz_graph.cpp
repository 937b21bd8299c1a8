#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/tjz_graph.hpp"

using namespace slowmode;

TEST_CASE("node count and PSD structure") {
  const auto pg = graph_laplacian_tjz(6);
  CHECK(pg.n_nodes == (1 << 7) - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pg.laplacian.dense(), Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()[0] > -1e-12);
  CHECK(std::abs(es.eigenvalues()[0]) < 1e-12);  // identity combination
}

TEST_CASE("ground state carries sqrt(node weight) amplitudes") {
  const int L = 5;
  const auto pg = graph_laplacian_tjz(L);
  // expected kernel vector: sqrt(binom(L, len(pattern))) per node
  Eigen::VectorXd v(pg.n_nodes);
  long idx = 0;
  for (int l = 0; l <= L; ++l) {
    double bin = 1;
    for (int i = 0; i < l; ++i) bin = bin * (L - i) / (i + 1);
    for (long b = 0; b < (1L << l); ++b) v[idx++] = std::sqrt(bin);
  }
  CHECK(pg.laplacian.multiply(v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("laplacian gap equals first-order perturbation theory gap") {
  for (int L = 3; L <= 7; ++L) {
    const double lap = lowest_nonzero_eigenvalue(graph_laplacian_tjz(L).laplacian.dense());
    const double pt = lowest_nonzero_eigenvalue(tjz_first_order_pt_dense(L, 1.0));
    CHECK(std::abs(lap - pt) < 1e-10);
  }
}

TEST_CASE("cheeger bounds bracket the gap") {
  for (int L = 3; L <= 7; ++L) {
    const auto pg = graph_laplacian_tjz(L);
    const double gap = lowest_nonzero_eigenvalue(pg.laplacian.dense());
    CHECK(gap <= pg.cheeger_upper);
    CHECK(gap <= pg.cheeger_upper_round);
    CHECK(gap >= 0.5 * pg.conductance_cut * pg.conductance_cut);
    CHECK(pg.cheeger_upper == doctest::Approx(4.0 / (std::pow(3.0, L) - 1)));
  }
}

TEST_CASE("pt matrix scales linearly with g") {
  const auto a = tjz_first_order_pt_dense(4, 1.0);
  const auto b = tjz_first_order_pt_dense(4, 2.5);
  CHECK((b - 2.5 * a).cwiseAbs().maxCoeff() < 1e-12);
}
