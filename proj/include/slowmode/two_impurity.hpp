#pragma once

#include "slowmode/sparse.hpp"
#include "slowmode/tjz_effective.hpp"

namespace slowmode {

/// First-order effective Hamiltonian of the t-Jz chain with state-flip
/// impurities at both boundaries, over the single-flip basis |k,l),
/// 1 <= k <= l <= L (dimension L(L+1)/2). The right impurity hops l -> l+1
/// within each k block; the left one hops (k,l) -> (k+1,l+1).
SparseOperator build_heff_two_impurity(int L);

/// Lowest eigenvalue of the two-impurity effective Hamiltonian.
double heff_two_impurity_gap(int L);

/// Hopping model of the left SLIOMs |q~_k) with exact matrix elements
/// v_k = (q~_k|V_1 + V_L|q~_k), w_k = (q~_{k+1}|V_1|q~_k).
Tridiagonal build_sliom_hopping(int L);
double sliom_hopping_gap(int L);

/// Basis index of |k,l) inside the two-impurity operator (1-based k,l).
long kl_index(int L, int k, int l);

}  // namespace slowmode
