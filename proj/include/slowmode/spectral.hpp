#pragma once

#include <vector>

#include "slowmode/banded.hpp"
#include "slowmode/eigensolve.hpp"
#include "slowmode/series.hpp"

namespace slowmode {

/// C(j,j;t) = sum_a e^{-E_a t} phi_a(j)^2 for each probe site (1-based).
std::vector<CorrelationSeries> spectral_correlation(const BandedOperator& h,
                                                    const std::vector<int>& probe_sites,
                                                    const std::vector<double>& times);

/// Cross correlation from precomputed probe data: C(j_p, j_q; t).
double spectral_cross(const ProbeSpectral& ps, int p, int q, double t);

/// Magnetization evolution from the fully polarized initial state:
/// sum_a e^{-E_a t} |sum_j phi_a(j)|^2. Equals L at t=0.
CorrelationSeries magnetization_from_modes(const BandedOperator& h,
                                           const std::vector<double>& times);

}  // namespace slowmode
