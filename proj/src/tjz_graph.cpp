#include "slowmode/tjz_graph.hpp"

#include <cmath>
#include <vector>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// patterns of length l = 0..L, sigma_i in {up,down} as bit i-1;
// node index = (2^l - 1) + bits
inline long node_index(int l, long bits) { return ((1L << l) - 1) + bits; }

}  // namespace

PatternGraph graph_laplacian_tjz(int L, long cap) {
  const long n = (1L << (L + 1)) - 1;
  if (n > cap) throw SizeError("pattern count exceeds cap");
  PatternGraph g;
  g.L = L;
  g.n_nodes = n;

  std::vector<double> deg(n);
  for (int l = 0; l <= L; ++l) {
    const double d = binom(L, l);
    for (long b = 0; b < (1L << l); ++b) deg[node_index(l, b)] = d;
  }

  SparseOperator::Builder bld(n);
  auto add_edge = [&](long u, long v, double w) {
    bld.add(u, u, w / deg[u]);
    bld.add(v, v, w / deg[v]);
    bld.add(u, v, -w / std::sqrt(deg[u] * deg[v]));
  };
  for (int l = 1; l <= L; ++l) {
    const double w = 0.5 * binom(L - 1, l - 1);
    for (long p = 0; p < (1L << (l - 1)); ++p) {
      const long parent = node_index(l - 1, p);
      const long cu = node_index(l, p);                        // append up
      const long cd = node_index(l, p | (1L << (l - 1)));      // append down
      add_edge(parent, cu, w);
      add_edge(parent, cd, w);
      add_edge(cu, cd, w);
    }
  }
  g.laplacian = bld.assemble();

  // cut: every pattern whose first spin is down
  const double vol_s = 0.5 * (std::pow(3.0, L) - 1.0);
  g.conductance_cut = 1.0 / vol_s;  // |dS| = 2 w_1 = 1
  g.cheeger_upper = 2.0 * g.conductance_cut;
  g.cheeger_upper_round = 4.0 / std::pow(3.0, L);
  return g;
}

Eigen::MatrixXd tjz_first_order_pt_dense(int L, double g) {
  if (L > 10) throw SizeError("explicit pattern states limited to L <= 10");
  long n3 = 1;
  for (int i = 0; i < L; ++i) n3 *= 3;
  const long pwL = n3 / 3;  // 3^{L-1}, stride of the last site
  const long n = (1L << (L + 1)) - 1;

  // pattern index and length per configuration
  std::vector<long> pat(n3);
  std::vector<int> len(n3);
  for (long c = 0; c < n3; ++c) {
    long bits = 0;
    int l = 0;
    long rest = c;
    for (int j = 0; j < L; ++j) {
      const int d = static_cast<int>(rest % 3);
      rest /= 3;
      if (d != 0) {
        if (d == 2) bits |= 1L << l;
        ++l;
      }
    }
    pat[c] = node_index(l, bits);
    len[c] = l;
  }

  // local state-flip matrix g(1 - F) over states {0,1,2}
  Eigen::Matrix3d vloc;
  vloc << 1, -0.5, -0.5, -0.5, 1, -0.5, -0.5, -0.5, 1;
  vloc *= g;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (long c = 0; c < n3; ++c) {
    const int d = static_cast<int>((c / pwL) % 3);
    for (int b = 0; b < 3; ++b) {
      if (vloc(d, b) == 0) continue;
      const long c2 = c + (b - d) * pwL;
      m(pat[c], pat[c2]) += vloc(d, b) / std::sqrt(binom(L, len[c]) * binom(L, len[c2]));
    }
  }
  return m;
}

double lowest_nonzero_eigenvalue(const Eigen::MatrixXd& h, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, std::abs(es.eigenvalues()[es.eigenvalues().size() - 1]));
  for (long i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > tol * scale) return es.eigenvalues()[i];
  throw EigFailure("matrix is numerically zero");
}

}  // namespace slowmode
