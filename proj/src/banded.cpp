#include "slowmode/banded.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "slowmode/errors.hpp"

namespace slowmode {

BandedOperator BandedOperator::zero(int n, int bw) {
  BandedOperator op;
  op.n = n;
  op.bw = bw;
  op.bands = Eigen::MatrixXd::Zero(bw + 1, n);
  return op;
}

double& BandedOperator::at(int i, int j) {
  if (j < i || j - i > bw || i < 0 || j >= n) throw Error("band index out of range");
  return bands(j - i, i);
}

double BandedOperator::get(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == n - 1 && corner != 0) return corner;
  if (j - i > bw) return 0.0;
  return bands(j - i, i);
}

void BandedOperator::add(int i, int j, double v) {
  if (i > j) std::swap(i, j);
  at(i, j) += v;
}

Eigen::MatrixXd BandedOperator::dense() const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d <= bw && i + d < n; ++d) {
      h(i, i + d) = bands(d, i);
      h(i + d, i) = bands(d, i);
    }
  if (corner != 0) {
    h(0, n - 1) += corner;
    h(n - 1, 0) += corner;
  }
  return h;
}

Eigen::VectorXd BandedOperator::multiply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    double acc = bands(0, i) * x[i];
    for (int d = 1; d <= bw; ++d) {
      if (i + d < n) acc += bands(d, i) * x[i + d];
      if (i - d >= 0) acc += bands(d, i - d) * x[i - d];
    }
    y[i] = acc;
  }
  if (corner != 0) {
    y[0] += corner * x[n - 1];
    y[n - 1] += corner * x[0];
  }
  return y;
}

double BandedOperator::norm_est() const {
  double best = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = std::max(0, i - bw); j <= std::min(n - 1, i + bw); ++j)
      row += std::abs(get(i, j));
    if (corner != 0 && (i == 0 || i == n - 1)) row += std::abs(corner);
    best = std::max(best, row);
  }
  return best;
}

BandedOperator build_u1(int L, Bc bc, std::optional<U1Impurity> impurity) {
  if (L < 2) throw SpanError("build_u1 needs L >= 2");
  BandedOperator h = BandedOperator::zero(L, 1);
  // one 8 (|j) - |j+1))((j| - (j+1|) projector per bond
  for (int j = 0; j + 1 < L; ++j) {
    h.add(j, j, 8.0);
    h.add(j + 1, j + 1, 8.0);
    h.add(j, j + 1, -8.0);
  }
  if (bc == Bc::Pbc) {
    h.add(0, 0, 8.0);
    h.add(L - 1, L - 1, 8.0);
    h.corner = -8.0;
  }
  if (impurity && impurity->g != 0) {
    if (impurity->site < 1 || impurity->site > L) throw ValidationError("impurity site out of [1,L]");
    if (impurity->g < 0) throw ValidationError("impurity strength must be >= 0");
    h.add(impurity->site - 1, impurity->site - 1, 4.0 * impurity->g);
  }
  return h;
}

BandedOperator build_dipole(int L, double J4, double J5, DipoleImpurity impurity) {
  if (L < 8) throw SpanError("build_dipole needs L >= 8 (disjoint bulk and boundary rows)");
  if (J4 < 0 || J5 < 0 || impurity.g < 0) throw ValidationError("couplings must be >= 0");
  BandedOperator h = BandedOperator::zero(L, 4);
  // window vectors |i) - |i+1) - |i+2) + |i+3) and |i) - |i+1) - |i+3) + |i+4)
  const int off4[4] = {0, 1, 2, 3};
  const double c4[4] = {1, -1, -1, 1};
  const int off5[4] = {0, 1, 3, 4};
  const double c5[4] = {1, -1, -1, 1};
  for (int i = 0; i + 3 < L; ++i)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) h.add(i + off4[a], i + off4[b], J4 * c4[a] * c4[b]);
  for (int i = 0; i + 4 < L; ++i)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) h.add(i + off5[a], i + off5[b], J5 * c5[a] * c5[b]);

  switch (impurity.kind) {
    case DipoleImpurity::Kind::None:
      break;
    case DipoleImpurity::Kind::ChargePreservingSwap:
      // g (|1) - |2))((1| - (2|)
      h.add(0, 0, impurity.g);
      h.add(1, 1, impurity.g);
      h.add(0, 1, -impurity.g);
      break;
    case DipoleImpurity::Kind::FullBreaking:
      for (int j = 0; j < 3; ++j) h.add(j, j, 4.0 * impurity.g);
      break;
  }
  return h;
}

}  // namespace slowmode
