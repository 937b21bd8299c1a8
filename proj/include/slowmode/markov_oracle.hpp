#pragma once

#include <vector>

#include <Eigen/Dense>

#include "slowmode/gateset.hpp"
#include "slowmode/series.hpp"

namespace slowmode {

/// Exact Markov-chain evaluation of the CA dynamics on the full configuration
/// space (m^L states). Complements the Monte Carlo sampler with zero-variance
/// results at small sizes.
class MarkovOracle {
 public:
  explicit MarkovOracle(const GateSet& gs, long cap = default_cap());
  static long default_cap() { return 531441; }  // 3^12

  long n_states() const { return n_; }

  /// One application of the exact step map: v -> sum_l w_l T_l v.
  Eigen::VectorXd apply_step(const Eigen::VectorXd& v) const;

  /// C(j,j;t) for t = 0..t_max, zero std_errors. probe sites 1-based.
  std::vector<CorrelationSeries> autocorrelation(const std::vector<int>& probe_sites,
                                                 int t_max) const;

  /// Cross correlations C(j, j0; t): returned matrix is L x (t_max+1).
  Eigen::MatrixXd cross_correlation(int j0, int t_max) const;

  /// <charge_tot(t)> from a fixed initial configuration.
  CorrelationSeries magnetization(const SpinConfiguration& initial, int t_max) const;

  /// Explicit one-step matrix; only sensible for small state counts.
  Eigen::MatrixXd one_step_matrix() const;

  /// Diagonal observable vector for charge at 0-based site.
  Eigen::VectorXd charge_observable(int site0) const;

 private:
  void apply_layer(const std::vector<GateRule>& rules, Eigen::VectorXd& v) const;

  GateSet gs_;
  int m_ = 2;
  long n_ = 0;
  std::vector<long> pow_;  // pow_[j] = m^j
};

}  // namespace slowmode
