#pragma once

#include <cstdint>
#include <vector>

#include "slowmode/gateset.hpp"
#include "slowmode/rng.hpp"
#include "slowmode/series.hpp"

namespace slowmode {

struct SampleOptions {
  long n_samples = 100000;
  int t_max = 100;
  std::uint64_t seed = 1;
  double budget = 1e13;   // cap on t_max * L * n_samples
  int block = 4096;       // samples per accumulator block (fixed, scheduling-free)
};

/// Applies one CA time step in place: draws one move by layer_weights and
/// fires its gates. The one-step transition matrix is symmetric, so the
/// uniform distribution is stationary.
void step(SpinConfiguration& config, const GateSet& gs, CounterRng& rng);

/// Infinite-temperature autocorrelation C(j,j;t) of Z (m=2) or S^z (m=3) at
/// integer times 0..t_max, Monte Carlo over uniform initial configurations.
///
/// OpenMP-parallel over realizations. Per-sample streams are counter-based
/// and accumulators are exact integers, so the result is bit-identical for
/// any worker count. probe_sites are 1-based.
std::vector<CorrelationSeries> estimate_autocorrelation(const GateSet& gs,
                                                        const std::vector<int>& probe_sites,
                                                        const SampleOptions& opt);

/// Serial reference implementation (one straight loop, no blocking). Kept for
/// testing: must agree bit-for-bit with estimate_autocorrelation.
std::vector<CorrelationSeries> estimate_autocorrelation_reference(
    const GateSet& gs, const std::vector<int>& probe_sites, const SampleOptions& opt);

/// <sum_j charge_j (t)> from a fixed initial configuration.
CorrelationSeries estimate_magnetization(const GateSet& gs, const SpinConfiguration& initial,
                                         const SampleOptions& opt);

}  // namespace slowmode
