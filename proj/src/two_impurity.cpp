#include "slowmode/two_impurity.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "slowmode/eigensolve.hpp"
#include "slowmode/errors.hpp"
#include "slowmode/lanczos.hpp"

namespace slowmode {

namespace {

double mu_plus(int L, int l) { return 1.0 + 0.5 * l / L; }
double mu_minus(int L, int l) { return 1.0 - 0.5 * l / L; }
double hop_t(int L, int l) {
  return std::sqrt(static_cast<double>(l + 1) * (L - l)) / (std::sqrt(2.0) * L);
}

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// P(l) = 2^l binom(L,l) / 3^L, the pattern-norm distribution
double pattern_weight(int L, int l) {
  return std::exp(log_binom(L, l) + l * std::log(2.0) - L * std::log(3.0));
}

}  // namespace

long kl_index(int L, int k, int l) {
  if (!(1 <= k && k <= l && l <= L)) throw ValidationError("need 1 <= k <= l <= L");
  const long km1 = k - 1;
  return km1 * L - km1 * (km1 - 1) / 2 + (l - k);
}

SparseOperator build_heff_two_impurity(int L) {
  if (L < 2) throw ValidationError("need L >= 2");
  const long dim = static_cast<long>(L) * (L + 1) / 2;
  SparseOperator::Builder bld(dim);
  for (int k = 1; k <= L; ++k) {
    for (int l = k; l <= L; ++l) {
      const long i = kl_index(L, k, l);
      double diag = (l == k ? mu_plus(L, k) : mu_minus(L, l));        // right impurity
      diag += (k == 1 ? mu_plus(L, l) : mu_minus(L, l));              // left impurity
      bld.add(i, i, diag);
      if (l < L) {
        bld.add(i, kl_index(L, k, l + 1), -hop_t(L, l));              // right: l -> l+1
        bld.add(i, kl_index(L, k + 1, l + 1), -hop_t(L, l));          // left: (k,l) -> (k+1,l+1)
      }
    }
  }
  return bld.assemble();
}

double heff_two_impurity_gap(int L) {
  const SparseOperator h = build_heff_two_impurity(L);
  if (h.dim() <= 1200) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  }
  LanczosOptions opt;
  opt.nev = 1;
  opt.max_basis = 128;
  opt.tol = 1e-12;
  opt.want_vectors = false;
  return lowest_eigenpairs(h, opt).values[0];
}

namespace {

// suffix log-sum-exp accumulator; the pattern weights 2^l binom(L,l)/3^L
// underflow doubles near k ~ L for L >~ 1700, while every matrix element
// stays O(1), so the sums are carried in log space
struct SuffixLse {
  double m = -std::numeric_limits<double>::infinity();
  double s = 0;
  void add(double logv) {
    if (logv == -std::numeric_limits<double>::infinity()) return;
    if (logv > m) {
      s = s * std::exp(m - logv) + 1.0;
      m = logv;
    } else {
      s += std::exp(logv - m);
    }
  }
  double log() const { return s > 0 ? m + std::log(s) : -std::numeric_limits<double>::infinity(); }
};

}  // namespace

Tridiagonal build_sliom_hopping(int L) {
  if (L < 2) throw ValidationError("need L >= 2");
  std::vector<double> logp(L + 1);
  for (int l = 0; l <= L; ++l)
    logp[l] = log_binom(L, l) + l * std::log(2.0) - L * std::log(3.0);

  // suffix sums: (q_k|q_k), (q_k|V_1|q_k) for k != 1, -(q_{k+1}|V_1|q_k), all /3^L
  std::vector<double> log_norm(L + 1), log_v1(L + 1), log_w(L + 1);
  SuffixLse norm, v1, w;
  for (int k = L; k >= 1; --k) {
    norm.add(logp[k]);
    v1.add(logp[k] + std::log(mu_minus(L, k)));
    if (k < L) w.add(logp[k] + std::log(static_cast<double>(L - k) / L));
    log_norm[k] = norm.log();
    log_v1[k] = v1.log();
    log_w[k] = w.log();
  }
  SuffixLse a1;  // sum_{l>=1} P(l) mu_l^+
  for (int l = 1; l <= L; ++l) a1.add(logp[l] + std::log(mu_plus(L, l)));

  Tridiagonal t;
  t.diag.resize(L);
  t.off.resize(L - 1);
  for (int k = 1; k <= L; ++k) {
    const double log_a = k == 1 ? a1.log() : log_v1[k];
    const double log_b = std::log(1.5 * k / L) + logp[k];  // (q_k|V_L|q_k)/3^L
    t.diag[k - 1] = std::exp(log_a - log_norm[k]) + std::exp(log_b - log_norm[k]);
    if (k < L)
      t.off[k - 1] = -std::exp(log_w[k] - 0.5 * (log_norm[k] + log_norm[k + 1]));
  }
  return t;
}

double sliom_hopping_gap(int L) {
  const Tridiagonal t = build_sliom_hopping(L);
  return tridiagonal_eigenvalues(t.diag, t.off).minCoeff();
}

}  // namespace slowmode
