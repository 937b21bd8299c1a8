#pragma once

#include <optional>

#include <Eigen/Dense>

namespace slowmode {

enum class Bc { Obc, Pbc };

/// Real symmetric banded matrix, upper bands stored: bands(d, j) = H(j, j+d).
/// A PBC wrap element H(0, n-1) is kept separately (only used at small sizes).
struct BandedOperator {
  int n = 0;
  int bw = 0;
  Eigen::MatrixXd bands;  // (bw+1) x n, unused tail entries zero
  double corner = 0.0;

  static BandedOperator zero(int n, int bw);
  double& at(int i, int j);       // i <= j <= i + bw
  double get(int i, int j) const;
  void add(int i, int j, double v);
  Eigen::MatrixXd dense() const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  double norm_est() const;  // Gershgorin bound on the spectral radius
};

struct U1Impurity {
  int site = 1;  // 1-based
  double g = 0;
};

/// Hydro-mode single-particle Hamiltonian of the U(1) chain: hopping -8,
/// on-site 16 in the bulk (8 on OBC edge sites), +4g at the impurity site.
BandedOperator build_u1(int L, Bc bc, std::optional<U1Impurity> impurity = std::nullopt);

struct DipoleImpurity {
  enum class Kind { None, ChargePreservingSwap, FullBreaking };
  Kind kind = Kind::None;
  double g = 0;
};

/// Single-flip projection of the dipole-conserving chain with 4- and 5-local
/// moves; assembled window by window, which also produces the open-boundary
/// rows. OBC only, bandwidth 4.
BandedOperator build_dipole(int L, double J4 = 1.0, double J5 = 0.7071067811865476,
                            DipoleImpurity impurity = {});

}  // namespace slowmode
