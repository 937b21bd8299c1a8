#pragma once

#include <vector>

#include <Eigen/Dense>

#include "slowmode/series.hpp"

namespace slowmode {

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // size diag.size()-1
  int n() const { return static_cast<int>(diag.size()); }
};

struct TridiagEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

TridiagEigen eigh(const Tridiagonal& t);

/// Single-flip effective Hamiltonian H_k of the t-Jz chain with a state-flip
/// impurity at the right boundary: dimension L-k+1 over l = k..L, potentials
/// mu_k^+ = 1 + k/2L at l = k, mu_l^- = 1 - l/2L beyond, hoppings
/// t_l = sqrt((l+1)(L-l)) / (sqrt(2) L).
Tridiagonal build_effective_hk(int L, int k);

/// Parent chain H_0 on l = 0..L with mu^- everywhere; exactly solvable.
Tridiagonal build_parent_h0(int L);
/// Closed-form spectrum of H_0: 3/4 - 3 m'/(2L), m' = -L/2 .. L/2, ascending.
Eigen::VectorXd parent_h0_exact_spectrum(int L);

/// Normalized coefficients of the SLIOM |q_k) in the |k,l) basis
/// (proportional to sqrt(2^l binom(L,l)), l = k..L).
Eigen::VectorXd qk_coefficients(int L, int k);

/// Exact variational energy of |q_k) under the boundary impurity.
/// k = 1 supports any impurity site (per-site closed form); k > 1 requires
/// j_s = L. Evaluated with exact big-integer rationals.
double sliom_variational_energy_tjz(int L, int k, int j_s, double g);

/// Large-L approximation for k/L = alpha < 2/3.
double sliom_variational_energy_tjz_approx(int L, double alpha, double g);

/// H3 closed forms: leftmost charge under the two-site boundary impurity and
/// bulk blockade at j0 (1-based).
double sliom_variational_energy_h3_left(int L, double g);
double sliom_variational_energy_h3_blockade(int L, int j0, double g);

/// Certified decay-rate bound |dC_q/dt| <= Delta_var, and the implied
/// timescale to lose `fraction` of the autocorrelation.
struct DecayBound {
  double rate;
  double time_to_lose(double fraction) const { return fraction / rate; }
};
DecayBound sliom_decay_bound_tjz(int L, int k, int j_s, double g);
DecayBound sliom_decay_bound_h3_blockade(int L, int j0, double g);

/// Scaled overlap (S_j^z | k,l) / 3^{L/2}; all sites 1-based.
double sz_overlap_scaled(int L, int j, int k, int l);

/// Unperturbed Mazur bound at site j: sum of squared scaled overlaps.
double mazur_bound_tjz(int L, int j);
/// Closed form at the edge: 2(2L+1)/(9L).
double mazur_bound_edge_exact(int L);
/// Prethermal plateau of the boundary correlation: 4/(9(1-3^{-L})).
double plateau_value_tjz(int L);

/// Effective autocorrelation of S_j^z from the spectra of H_{k<=j}:
/// C(t) = 3^{-L} sum_{k<=j} sum_n e^{-g lambda_n^k t} |(S_j^z|lambda_n^k)|^2.
std::vector<CorrelationSeries> effective_correlation_tjz(int L, const std::vector<int>& sites,
                                                         const std::vector<double>& times,
                                                         double g = 1.0);

/// First-order splitting of the U(1) ferromagnetic manifold by a spin-flip
/// impurity: 2g(1 - 2 Mx/L) for Mx = L/2 .. -L/2. A diagnostic known to fail
/// qualitatively (the true impurity gap is O(1/L^2), not 4g/L).
std::vector<double> naive_u1_splitting(int L, double g);

}  // namespace slowmode
