#pragma once

#include <Eigen/Dense>

#include "slowmode/sparse.hpp"

namespace slowmode {

/// First-order effective operator of the t-Jz chain with a state-flip
/// impurity at site L, over the 2^{L+1}-1 spin patterns: a normalized graph
/// Laplacian. Nodes carry weight binom(L, len); the impurity connects
/// {parent, child-up, child-down} pairwise with weight binom(L-1, len-1)/2.
struct PatternGraph {
  int L = 0;
  long n_nodes = 0;
  SparseOperator laplacian;
  double conductance_cut = 0;   // phi(S) for the first-spin-down cut
  double cheeger_upper = 0;     // 2 phi(S) = 4/(3^L - 1)
  double cheeger_upper_round = 0;  // the rounded 4/3^L form
};

PatternGraph graph_laplacian_tjz(int L, long cap = 1 << 22);

/// Independent route: first-order perturbation matrix (G_sigma|V|G_sigma')
/// from explicit pattern states in the 3^L composite space. Small L only.
Eigen::MatrixXd tjz_first_order_pt_dense(int L, double g);

/// Lowest nonzero eigenvalue of a PSD matrix with a known one-dimensional
/// kernel (dense path).
double lowest_nonzero_eigenvalue(const Eigen::MatrixXd& h, double tol = 1e-11);

}  // namespace slowmode
