#include "slowmode/superham.hpp"

#include <cmath>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

struct Space {
  int m = 2;
  int L = 0;
  long n = 0;
  std::vector<long> pw;
};

Space make_space(int m, int L, long cap) {
  const double states = std::pow(static_cast<double>(m), L);
  if (states > static_cast<double>(cap))
    throw SizeError("m^L = " + std::to_string(states) + " exceeds cap " + std::to_string(cap));
  Space sp;
  sp.m = m;
  sp.L = L;
  sp.n = static_cast<long>(std::llround(states));
  sp.pw.resize(L + 1);
  sp.pw[0] = 1;
  for (int j = 1; j <= L; ++j) sp.pw[j] = sp.pw[j - 1] * m;
  return sp;
}

inline int digit(const Space& sp, long c, int site) {
  return static_cast<int>((c / sp.pw[site]) % sp.m);
}

// coeff * (|a> - |b>)(<a| - <b|) summed over all embeddings at `sites`
void add_pair_rk(SparseOperator::Builder& bld, const Space& sp, const std::vector<int>& sites,
                 const std::vector<int>& a, const std::vector<int>& b, double coeff) {
  long delta = 0;
  for (std::size_t i = 0; i < sites.size(); ++i)
    delta += (static_cast<long>(b[i]) - a[i]) * sp.pw[sites[i]];
  for (long c = 0; c < sp.n; ++c) {
    bool is_a = true;
    for (std::size_t i = 0; i < sites.size() && is_a; ++i) is_a = digit(sp, c, sites[i]) == a[i];
    if (!is_a) continue;
    const long c2 = c + delta;
    bld.add(c, c, coeff);
    bld.add(c2, c2, coeff);
    bld.add(c, c2, -coeff);
  }
}

// state-flip impurity g(1 - F) at one site: g * (3/2) (1 - uniform projector)
void add_state_flip(SparseOperator::Builder& bld, const Space& sp, int site, double g) {
  const long pj = sp.pw[site];
  for (long c = 0; c < sp.n; ++c) {
    if (digit(sp, c, site) != 0) continue;
    const long c0 = c, c1 = c + pj, c2 = c + 2 * pj;
    bld.add(c0, c0, g);
    bld.add(c1, c1, g);
    bld.add(c2, c2, g);
    bld.add(c0, c1, -g / 2);
    bld.add(c0, c2, -g / 2);
    bld.add(c1, c2, -g / 2);
  }
}

int charge_of(SuperModel model, int state) {
  switch (model) {
    case SuperModel::U1:
    case SuperModel::DipHalf: return 2 * state - 1;
    case SuperModel::TJz: return state == 0 ? 0 : (state == 1 ? 1 : -1);
    case SuperModel::H3:
    case SuperModel::H3H4: return state - 1;
  }
  return 0;
}

}  // namespace

std::string super_model_name(SuperModel m) {
  switch (m) {
    case SuperModel::U1: return "u1";
    case SuperModel::DipHalf: return "dip_half";
    case SuperModel::TJz: return "tjz";
    case SuperModel::H3: return "h3";
    case SuperModel::H3H4: return "h3h4";
  }
  return "?";
}

SuperModel super_model_from_name(const std::string& name) {
  if (name == "u1") return SuperModel::U1;
  if (name == "dip_half") return SuperModel::DipHalf;
  if (name == "tjz") return SuperModel::TJz;
  if (name == "h3") return SuperModel::H3;
  if (name == "h3h4") return SuperModel::H3H4;
  throw ValidationError("unknown super model: " + name);
}

int super_local_dim(SuperModel m) {
  return (m == SuperModel::U1 || m == SuperModel::DipHalf) ? 2 : 3;
}

SparseOperator build_super_hamiltonian(SuperModel model, int L, const SuperImpurity& impurity,
                                       double g, long cap) {
  const int m = super_local_dim(model);
  const Space sp = make_space(m, L, cap);
  SparseOperator::Builder bld(sp.n);

  switch (model) {
    case SuperModel::U1:
      for (int j = 0; j + 1 < L; ++j) add_pair_rk(bld, sp, {j, j + 1}, {1, 0}, {0, 1}, 8.0);
      break;
    case SuperModel::DipHalf: {
      const double J4 = 1.0, J5 = 1.0 / std::sqrt(2.0);
      for (int i = 0; i + 3 < L; ++i)
        add_pair_rk(bld, sp, {i, i + 1, i + 2, i + 3}, {1, 0, 0, 1}, {0, 1, 1, 0}, 4.0 * J4);
      for (int i = 0; i + 4 < L; ++i)
        for (int mid = 0; mid < 2; ++mid)
          add_pair_rk(bld, sp, {i, i + 1, i + 2, i + 3, i + 4}, {1, 0, mid, 0, 1},
                      {0, 1, mid, 1, 0}, 4.0 * J5);
      break;
    }
    case SuperModel::TJz:
      for (int j = 0; j + 1 < L; ++j)
        for (int s = 1; s <= 2; ++s) add_pair_rk(bld, sp, {j, j + 1}, {s, 0}, {0, s}, 2.0);
      break;
    case SuperModel::H3:
    case SuperModel::H3H4:
      // states 0,1,2 = -,0,+
      for (int j = 0; j + 2 < L; ++j) {
        add_pair_rk(bld, sp, {j, j + 1, j + 2}, {1, 2, 1}, {2, 0, 2}, 2.0);
        add_pair_rk(bld, sp, {j, j + 1, j + 2}, {1, 2, 0}, {2, 0, 1}, 2.0);
        add_pair_rk(bld, sp, {j, j + 1, j + 2}, {1, 0, 1}, {0, 2, 0}, 2.0);
        add_pair_rk(bld, sp, {j, j + 1, j + 2}, {1, 0, 2}, {0, 2, 1}, 2.0);
      }
      if (model == SuperModel::H3H4) {
        // charge shift (+1,-1,-1,+1): one RK projector per valid application
        for (int i = 0; i + 3 < L; ++i) {
          const long delta = sp.pw[i] - sp.pw[i + 1] - sp.pw[i + 2] + sp.pw[i + 3];
          for (long c = 0; c < sp.n; ++c) {
            const int d0 = digit(sp, c, i), d1 = digit(sp, c, i + 1), d2 = digit(sp, c, i + 2),
                      d3 = digit(sp, c, i + 3);
            if (d0 + 1 > 2 || d1 - 1 < 0 || d2 - 1 < 0 || d3 + 1 > 2) continue;
            const long c2 = c + delta;
            bld.add(c, c, 2.0);
            bld.add(c2, c2, 2.0);
            bld.add(c, c2, -2.0);
          }
        }
      }
      break;
  }

  for (int s : impurity.sites)
    if (s < 1 || s > L) throw ValidationError("impurity site out of [1,L]");
  switch (impurity.kind) {
    case SuperImpurity::Kind::None:
      break;
    case SuperImpurity::Kind::SiteFlip:
      if (m != 2) throw UnsupportedImpurity("site flip requires a two-state model");
      for (int s : impurity.sites) add_pair_rk(bld, sp, {s - 1}, {0}, {1}, 2.0 * g);
      break;
    case SuperImpurity::Kind::ChargePreservingSwap: {
      if (model != SuperModel::DipHalf)
        throw UnsupportedImpurity("charge-preserving swap only built for the dipole chain");
      if (impurity.sites.size() != 1) throw ValidationError("swap takes the left site of the bond");
      const int s = impurity.sites[0] - 1;
      if (s + 1 >= L) throw ValidationError("swap bond out of range");
      add_pair_rk(bld, sp, {s, s + 1}, {1, 0}, {0, 1}, g);
      break;
    }
    case SuperImpurity::Kind::FullBreakingFlips:
      if (m != 2) throw UnsupportedImpurity("multi-site flips require a two-state model");
      for (int s : impurity.sites) add_pair_rk(bld, sp, {s - 1}, {0}, {1}, 2.0 * g);
      break;
    case SuperImpurity::Kind::StateFlip:
      if (m != 3) throw UnsupportedImpurity("state flip requires a three-state model");
      for (int s : impurity.sites) add_state_flip(bld, sp, s - 1, g);
      break;
  }
  return bld.assemble();
}

int kernel_dimension_dense(const SparseOperator& op, double eps_scale) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense(), Eigen::EigenvaluesOnly);
  const double tol = eps_scale * std::max(1.0, op.norm_est());
  int count = 0;
  for (long i = 0; i < op.dim(); ++i)
    if (es.eigenvalues()[i] <= tol) ++count;
  return count;
}

Eigen::VectorXd state_identity(int m, int L) {
  const Space sp = make_space(m, L, 1L << 40);
  return Eigen::VectorXd::Ones(sp.n);
}

Eigen::VectorXd state_sz(SuperModel model, int L, int site) {
  const Space sp = make_space(super_local_dim(model), L, 1L << 40);
  if (site < 1 || site > L) throw ValidationError("site out of [1,L]");
  Eigen::VectorXd v(sp.n);
  for (long c = 0; c < sp.n; ++c) v[c] = charge_of(model, digit(sp, c, site - 1));
  return v;
}

Eigen::VectorXd state_qk_tjz(int L, int k) {
  const Space sp = make_space(3, L, 1L << 40);
  if (k < 1 || k > L) throw ValidationError("k out of [1,L]");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sp.n);
  for (long c = 0; c < sp.n; ++c) {
    int seen = 0;
    for (int j = 0; j < L; ++j) {
      const int d = digit(sp, c, j);
      if (d != 0 && ++seen == k) {
        v[c] = d == 1 ? 1.0 : -1.0;
        break;
      }
    }
  }
  return v;
}

Eigen::VectorXd state_sigma_left_h3(int L) {
  const Space sp = make_space(3, L, 1L << 40);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sp.n);
  for (long c = 0; c < sp.n; ++c) {
    for (int j = 0; j < L; ++j) {
      const int d = digit(sp, c, j);
      if (d != 1) {  // state 1 = empty (zero charge)
        v[c] = d == 2 ? 1.0 : -1.0;
        break;
      }
    }
  }
  return v;
}

Eigen::VectorXd state_blockade_h3(int L, int j0) {
  const Space sp = make_space(3, L, 1L << 40);
  if (j0 < 2 || j0 + 1 >= L) throw ValidationError("blockade needs charges on both sides");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sp.n);
  // charge c means digits j0, j0+1 equal c, nearest charge left of the pair
  // and nearest charge right of the pair both equal c (1-based j0)
  for (long cfg = 0; cfg < sp.n; ++cfg) {
    for (int target : {2, 0}) {  // ++ then --
      if (digit(sp, cfg, j0 - 1) != target || digit(sp, cfg, j0) != target) continue;
      int left = -1, right = -1;
      for (int j = j0 - 2; j >= 0; --j)
        if (digit(sp, cfg, j) != 1) {
          left = digit(sp, cfg, j);
          break;
        }
      for (int j = j0 + 1; j < L; ++j)
        if (digit(sp, cfg, j) != 1) {
          right = digit(sp, cfg, j);
          break;
        }
      if (left == target && right == target) v[cfg] += target == 2 ? 1.0 : -1.0;
    }
  }
  return v;
}

Eigen::VectorXd state_kl_tjz(int L, int k, int l) {
  if (!(1 <= k && k <= l && l <= L)) throw ValidationError("need 1 <= k <= l <= L");
  const Space sp = make_space(3, L, 1L << 40);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sp.n);
  double log_choose = std::lgamma(L + 1) - std::lgamma(l + 1) - std::lgamma(L - l + 1);
  const double amp = std::exp(-0.5 * (log_choose + l * std::log(2.0)));
  for (long c = 0; c < sp.n; ++c) {
    int count = 0, kth = 0;
    for (int j = 0; j < L; ++j) {
      const int d = digit(sp, c, j);
      if (d != 0) {
        ++count;
        if (count == k) kth = d;
        if (count > l) break;
      }
    }
    if (count == l) v[c] = (kth == 2 ? -1.0 : 1.0) * amp;
  }
  return v;
}

double rayleigh(const SparseOperator& op, const Eigen::VectorXd& v) {
  return v.dot(op.multiply(v)) / v.squaredNorm();
}

}  // namespace slowmode
