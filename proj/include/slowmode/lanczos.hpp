#pragma once

#include <vector>

#include <Eigen/Dense>

#include "slowmode/sparse.hpp"

namespace slowmode {

struct LanczosOptions {
  int nev = 1;              // lowest eigenpairs wanted
  int max_basis = 96;       // thick-restart basis size
  int max_restarts = 600;
  double tol = 1e-10;       // residual tolerance relative to |H|
  bool want_vectors = true;
  std::vector<Eigen::VectorXd> deflate;  // known eigenvectors to project out
};

struct LanczosResult {
  Eigen::VectorXd values;     // ascending
  Eigen::MatrixXd vectors;    // empty when !want_vectors
  Eigen::VectorXd residuals;  // |H x - lambda x| per pair
  int matvecs = 0;
  bool converged = false;
};

/// Lowest eigenpairs of a symmetric sparse operator by thick-restart Lanczos
/// with full reorthogonalization. Deterministic start vector, so repeated
/// runs give identical spectra. Throws ConvergenceFailure when the restart
/// budget is exhausted.
LanczosResult lowest_eigenpairs(const SparseOperator& op, LanczosOptions opt = {});

}  // namespace slowmode
