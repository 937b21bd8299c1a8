#include "slowmode/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

EigenDecomposition eigh_dense(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw EigFailure("dense eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

// LAPACK banded storage, uplo='U', column-major: ab(bw + i - j, j) = H(i,j)
EigenDecomposition eigh_banded_lapack(const BandedOperator& op, bool vectors) {
  const int n = op.n, kd = op.bw, ldab = kd + 1;
  std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int d = 0; d <= kd && j + d < n; ++d)
      ab[static_cast<std::size_t>(j + d) * ldab + (kd - d)] = op.bands(d, j);
  EigenDecomposition ed;
  ed.energies.resize(n);
  Eigen::MatrixXd z;
  if (vectors) z.resize(n, n);
  int info = LAPACKE_dsbevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'U', n, kd, ab.data(), ldab,
                            ed.energies.data(), vectors ? z.data() : nullptr, n);
  if (info != 0) throw EigFailure("dsbevd failed, info=" + std::to_string(info));
  ed.orbitals = std::move(z);
  return ed;
}

void extract_tridiagonal(const BandedOperator& op, Eigen::VectorXd& d, Eigen::VectorXd& e) {
  d = op.bands.row(0).transpose();
  e.resize(op.n - 1);
  for (int i = 0; i + 1 < op.n; ++i) e[i] = op.bands(1, i);
}

// stemr over an index range [il, iu], 1-based inclusive
void stemr_range(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, int il, int iu,
                 Eigen::VectorXd& w, Eigen::MatrixXd& z) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(n);
  for (int i = 0; i + 1 < n; ++i) e[i] = off[i];
  e[n - 1] = 0;
  const int m_req = iu - il + 1;
  w.resize(n);
  z.resize(n, m_req);
  std::vector<int> isuppz(2 * static_cast<std::size_t>(m_req));
  int m = 0, tryrac = 1;
  int info = LAPACKE_dstemr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0, 0, il, iu, &m,
                            w.data(), z.data(), n, m_req, isuppz.data(), &tryrac);
  if (info != 0 || m != m_req) throw EigFailure("dstemr failed, info=" + std::to_string(info));
  w.conservativeResize(m);
}

}  // namespace

EigenDecomposition eigh_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  const int n = static_cast<int>(diag.size());
  if (n == 1) {
    EigenDecomposition ed;
    ed.energies = diag;
    ed.orbitals = Eigen::MatrixXd::Ones(1, 1);
    return ed;
  }
  Eigen::VectorXd w;
  Eigen::MatrixXd z;
  stemr_range(diag, off, 1, n, w, z);
  return {w, z};
}

Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(std::max(1, n - 1));
  for (int i = 0; i + 1 < n; ++i) e[i] = off[i];
  int info = LAPACKE_dsterf(n, d.data(), e.data());
  if (info != 0) throw EigFailure("dsterf failed, info=" + std::to_string(info));
  return Eigen::Map<Eigen::VectorXd>(d.data(), n);
}

EigenDecomposition eigh(const BandedOperator& op) {
  if (op.corner != 0 || op.n <= 512) return eigh_dense(op.dense());
  if (op.bw == 1) {
    Eigen::VectorXd d, e;
    extract_tridiagonal(op, d, e);
    return eigh_tridiagonal(d, e);
  }
  return eigh_banded_lapack(op, true);
}

Eigen::VectorXd eigh_values(const BandedOperator& op) {
  if (op.corner != 0 || op.n <= 512) return eigh_dense(op.dense()).energies;
  if (op.bw == 1) {
    Eigen::VectorXd d, e;
    extract_tridiagonal(op, d, e);
    return tridiagonal_eigenvalues(d, e);
  }
  return eigh_banded_lapack(op, false).energies;
}

ProbeSpectral probe_decomposition(const BandedOperator& op, const std::vector<int>& probe_sites,
                                  int chunk) {
  std::vector<int> p0;
  for (int j : probe_sites) {
    if (j < 1 || j > op.n) throw ValidationError("probe site out of [1,L]");
    p0.push_back(j - 1);
  }
  ProbeSpectral ps;
  const int P = static_cast<int>(p0.size());

  if (op.corner == 0 && op.bw == 1 && op.n > 512) {
    // chunked MRRR keeps peak memory at n * chunk
    Eigen::VectorXd d, e;
    extract_tridiagonal(op, d, e);
    const int n = op.n;
    ps.energies.resize(n);
    ps.amp.resize(P, n);
    ps.mode_sums.resize(n);
    for (int lo = 1; lo <= n; lo += chunk) {
      const int hi = std::min(n, lo + chunk - 1);
      Eigen::VectorXd w;
      Eigen::MatrixXd z;
      stemr_range(d, e, lo, hi, w, z);
      for (int a = 0; a < hi - lo + 1; ++a) {
        ps.energies[lo - 1 + a] = w[a];
        ps.mode_sums[lo - 1 + a] = z.col(a).sum();
        for (int p = 0; p < P; ++p) ps.amp(p, lo - 1 + a) = z(p0[p], a);
      }
    }
    return ps;
  }

  const EigenDecomposition ed = eigh(op);
  const int n = op.n;
  ps.energies = ed.energies;
  ps.amp.resize(P, n);
  ps.mode_sums.resize(n);
  for (int a = 0; a < n; ++a) {
    ps.mode_sums[a] = ed.orbitals.col(a).sum();
    for (int p = 0; p < P; ++p) ps.amp(p, a) = ed.orbitals(p0[p], a);
  }
  return ps;
}

double residual_norm(const BandedOperator& op, const EigenDecomposition& ed) {
  double worst = 0;
  for (int a = 0; a < ed.energies.size(); ++a) {
    Eigen::VectorXd r = op.multiply(ed.orbitals.col(a)) - ed.energies[a] * ed.orbitals.col(a);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double orthonormality_defect(const EigenDecomposition& ed) {
  Eigen::MatrixXd g = ed.orbitals.transpose() * ed.orbitals;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

}  // namespace slowmode
