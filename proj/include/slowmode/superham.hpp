#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slowmode/sparse.hpp"

namespace slowmode {

/// Models whose composite-spin super-Hamiltonian can be assembled exactly.
enum class SuperModel { U1, DipHalf, TJz, H3, H3H4 };

std::string super_model_name(SuperModel m);
SuperModel super_model_from_name(const std::string& name);
int super_local_dim(SuperModel m);

struct SuperImpurity {
  enum class Kind { None, SiteFlip, ChargePreservingSwap, FullBreakingFlips, StateFlip };
  Kind kind = Kind::None;
  std::vector<int> sites;  // 1-based

  static SuperImpurity none() { return {}; }
  static SuperImpurity site_flip(int site) { return {Kind::SiteFlip, {site}}; }
  static SuperImpurity swap_at(int site) { return {Kind::ChargePreservingSwap, {site}}; }
  static SuperImpurity full_breaking(std::vector<int> sites) {
    return {Kind::FullBreakingFlips, std::move(sites)};
  }
  static SuperImpurity state_flip(std::vector<int> sites) {
    return {Kind::StateFlip, std::move(sites)};
  }
};

/// Assembles the composite-spin-subspace super-Hamiltonian: one
/// Rokhsar-Kivelson projector per transition pair of every local move, plus
/// the impurity contribution, in the m^L product basis.
///
/// Couplings follow the single-flip normalization: U(1) bonds carry 8, t-Jz
/// and H3(+H4) moves carry 2, dipole windows carry 4*J with J4 = 1,
/// J5 = 1/sqrt(2); state-flip impurities enter as g(1 - F).
SparseOperator build_super_hamiltonian(SuperModel model, int L, const SuperImpurity& impurity,
                                       double g, long cap = 19683);

/// Number of eigenvalues below eps_scale * |H| (kernel dimension), by dense
/// diagonalization. Small sizes only.
int kernel_dimension_dense(const SparseOperator& op, double eps_scale = 1e-9);

// --- explicit operator states in the m^L composite basis ------------------

/// |identity): amplitude 1 on every configuration.
Eigen::VectorXd state_identity(int m, int L);

/// |S_site^z): diagonal charge observable (t-Jz / H3 encodings as in the CA).
Eigen::VectorXd state_sz(SuperModel model, int L, int site);

/// t-Jz SLIOM |q_k): amplitude = spin of the k-th particle (0 if fewer than k).
Eigen::VectorXd state_qk_tjz(int L, int k);

/// H3 leftmost-charge SLIOM |sigma_left).
Eigen::VectorXd state_sigma_left_h3(int L);

/// H3 blockade SLIOM |B^{++}_{j0,j0+1}) - |B^{--}_{j0,j0+1}) (orthogonal to identity).
Eigen::VectorXd state_blockade_h3(int L, int j0);

/// Normalized t-Jz single-flip pattern state |k,l) (X-basis pattern with the
/// k-th of l composite particles flipped).
Eigen::VectorXd state_kl_tjz(int L, int k, int l);

/// Rayleigh quotient (v|A|v)/(v|v).
double rayleigh(const SparseOperator& op, const Eigen::VectorXd& v);

}  // namespace slowmode
