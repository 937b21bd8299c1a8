#pragma once

#include <vector>

#include <Eigen/Dense>

#include "slowmode/banded.hpp"

namespace slowmode {

/// Full orthonormal eigendecomposition, energies ascending.
struct EigenDecomposition {
  Eigen::VectorXd energies;
  Eigen::MatrixXd orbitals;  // column a = orbital of energies[a]
};

/// Spectral data restricted to probe sites: enough to evaluate correlations
/// without holding the full orbital matrix.
struct ProbeSpectral {
  Eigen::VectorXd energies;
  Eigen::MatrixXd amp;        // (probes) x (n): phi_a(j_p)
  Eigen::VectorXd mode_sums;  // sum_j phi_a(j)
};

/// Dispatches on structure: PBC corner -> dense, bandwidth 1 -> tridiagonal
/// MRRR, else banded divide and conquer.
EigenDecomposition eigh(const BandedOperator& op);
Eigen::VectorXd eigh_values(const BandedOperator& op);

/// Probe-site amplitudes of all orbitals; tridiagonal path extracts
/// eigenvectors in chunks so L = 10^4 stays cheap. Probe sites 1-based.
ProbeSpectral probe_decomposition(const BandedOperator& op, const std::vector<int>& probe_sites,
                                  int chunk = 1024);

/// Tridiagonal full decomposition (LAPACK stemr). off has size n-1.
EigenDecomposition eigh_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& off);
Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off);

/// max_a |H phi_a - E_a phi_a| and max orthonormality defect; used in tests.
double residual_norm(const BandedOperator& op, const EigenDecomposition& ed);
double orthonormality_defect(const EigenDecomposition& ed);

}  // namespace slowmode
