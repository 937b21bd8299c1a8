#include "slowmode/lanczos.hpp"

#include <cmath>
#include <string>

#include "slowmode/errors.hpp"
#include "slowmode/rng.hpp"

namespace slowmode {

namespace {

// deterministic pseudo-random start vector
Eigen::VectorXd start_vector(long n) {
  Eigen::VectorXd v(n);
  CounterRng rng(0x5eed5eedull, 7);
  for (long i = 0; i < n; ++i) v[i] = rng.next_double() - 0.5;
  v[0] += 1.0;
  return v;
}

void orthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& basis, int cols,
                   const std::vector<Eigen::VectorXd>& deflate) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& d : deflate) v -= (d.dot(v) / d.squaredNorm()) * d;
    if (cols > 0) {
      const auto b = basis.leftCols(cols);
      v -= b * (b.transpose() * v);
    }
  }
}

}  // namespace

namespace {

// small operators: dense diagonalization with deflated directions shifted
// above the spectrum, so the restricted lowest pairs come out directly
LanczosResult lowest_eigenpairs_dense(const SparseOperator& op, const LanczosOptions& opt) {
  const long n = op.dim();
  Eigen::MatrixXd h = op.dense();
  const double shift = 10.0 * std::max(1.0, op.norm_est());
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n);
  for (const auto& d : opt.deflate) {
    const Eigen::VectorXd q = d / d.norm();
    proj -= q * q.transpose();
  }
  if (!opt.deflate.empty()) h = proj * h * proj;
  for (const auto& d : opt.deflate) {
    const Eigen::VectorXd q = d / d.norm();
    h += shift * q * q.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  LanczosResult res;
  res.values = es.eigenvalues().head(opt.nev);
  res.residuals.resize(opt.nev);
  if (opt.want_vectors) res.vectors.resize(n, opt.nev);
  for (int i = 0; i < opt.nev; ++i) {
    const Eigen::VectorXd x = es.eigenvectors().col(i);
    res.residuals[i] = (op.multiply(x) - res.values[i] * x).norm();
    if (opt.want_vectors) res.vectors.col(i) = x;
  }
  res.converged = true;
  return res;
}

}  // namespace

LanczosResult lowest_eigenpairs(const SparseOperator& op, LanczosOptions opt) {
  const long n = op.dim();
  if (opt.nev < 1) throw ValidationError("nev must be >= 1");
  if (n <= 1500 || n <= opt.max_basis + 2) return lowest_eigenpairs_dense(op, opt);
  const int m = std::min<long>(std::max(opt.max_basis, 3 * opt.nev + 10), n);
  const int keep = std::min(m - 2, std::max(opt.nev + 2, m / 3));
  const double norm_scale = std::max(1.0, op.norm_est());
  const double tol = opt.tol * norm_scale;

  Eigen::MatrixXd V(n, m + 1);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, m + 1);
  LanczosResult res;

  Eigen::VectorXd v = start_vector(n);
  orthogonalize(v, V, 0, opt.deflate);
  const double v0n = v.norm();
  if (v0n < 1e-14) throw ConvergenceFailure("start vector annihilated by deflation");
  V.col(0) = v / v0n;

  int k = 0;  // kept Ritz columns carried across restarts
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    // extend the factorization from column k to m
    for (int j = k; j < m; ++j) {
      Eigen::VectorXd w = op.multiply(V.col(j));
      ++res.matvecs;
      const double alpha = V.col(j).dot(w);
      T(j, j) = alpha;
      w -= alpha * V.col(j);
      if (j == k && k > 0) {  // kept block couples through the residual row of T
        for (int i = 0; i < k; ++i) w -= T(i, k) * V.col(i);
      } else if (j > 0) {
        w -= T(j - 1, j) * V.col(j - 1);
      }
      orthogonalize(w, V, j + 1, opt.deflate);
      double beta = w.norm();
      if (beta < 1e-13 * norm_scale) {
        // invariant subspace hit: continue with a fresh orthogonal direction
        w = start_vector(n);
        w[static_cast<long>((j * 2654435761u) % n)] += 2.0;
        orthogonalize(w, V, j + 1, opt.deflate);
        beta = w.norm();
        if (beta < 1e-12) break;
        T(j + 1, j) = T(j, j + 1) = 0.0;
      } else {
        T(j + 1, j) = T(j, j + 1) = beta;
      }
      V.col(j + 1) = w / beta;
    }

    // Rayleigh-Ritz on the m x m block
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.topLeftCorner(m, m));
    const Eigen::VectorXd theta = es.eigenvalues();
    const Eigen::MatrixXd s = es.eigenvectors();
    const double beta_m = T(m, m - 1);

    // residual estimates |beta_m * s(m-1, i)|
    bool done = true;
    for (int i = 0; i < opt.nev; ++i)
      if (std::abs(beta_m * s(m - 1, i)) > tol) done = false;

    if (done || restart == opt.max_restarts) {
      res.values = theta.head(opt.nev);
      res.residuals.resize(opt.nev);
      if (opt.want_vectors) res.vectors.resize(n, opt.nev);
      for (int i = 0; i < opt.nev; ++i) {
        Eigen::VectorXd x = V.leftCols(m) * s.col(i);
        x.normalize();
        res.residuals[i] = (op.multiply(x) - theta[i] * x).norm();
        ++res.matvecs;
        if (opt.want_vectors) res.vectors.col(i) = x;
      }
      res.converged = true;
      for (int i = 0; i < opt.nev; ++i)
        if (res.residuals[i] > 10 * tol) res.converged = false;
      if (!res.converged && restart == opt.max_restarts)
        throw ConvergenceFailure("lanczos: no convergence after " +
                                 std::to_string(res.matvecs) + " matvecs, worst residual " +
                                 std::to_string(res.residuals.maxCoeff()));
      if (res.converged) return res;
    }

    // thick restart: keep the lowest `keep` Ritz vectors
    Eigen::MatrixXd kept = V.leftCols(m) * s.leftCols(keep);
    Eigen::VectorXd f = V.col(m);  // residual direction
    V.leftCols(keep) = kept;
    V.col(keep) = f;
    T.setZero();
    for (int i = 0; i < keep; ++i) {
      T(i, i) = theta[i];
      T(i, keep) = T(keep, i) = beta_m * s(m - 1, i);
    }
    k = keep;
  }
  throw ConvergenceFailure("lanczos: restart loop exhausted");
}

}  // namespace slowmode
