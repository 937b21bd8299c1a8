#include "slowmode/spectral.hpp"

#include <cmath>

#include "slowmode/errors.hpp"

namespace slowmode {

std::vector<CorrelationSeries> spectral_correlation(const BandedOperator& h,
                                                    const std::vector<int>& probe_sites,
                                                    const std::vector<double>& times) {
  for (double t : times)
    if (t < 0) throw ValidationError("times must be >= 0");
  const ProbeSpectral ps = probe_decomposition(h, probe_sites);
  const int n = static_cast<int>(ps.energies.size());
  std::vector<CorrelationSeries> out(probe_sites.size());
  for (std::size_t p = 0; p < probe_sites.size(); ++p) {
    CorrelationSeries& s = out[p];
    s.site = probe_sites[p];
    s.times = times;
    s.values.resize(times.size());
    s.std_errors.assign(times.size(), 0.0);
    for (std::size_t it = 0; it < times.size(); ++it) {
      double acc = 0;
      for (int a = 0; a < n; ++a) {
        const double w = ps.amp(static_cast<int>(p), a);
        acc += std::exp(-ps.energies[a] * times[it]) * w * w;
      }
      s.values[it] = acc;
    }
  }
  return out;
}

double spectral_cross(const ProbeSpectral& ps, int p, int q, double t) {
  double acc = 0;
  for (int a = 0; a < ps.energies.size(); ++a)
    acc += std::exp(-ps.energies[a] * t) * ps.amp(p, a) * ps.amp(q, a);
  return acc;
}

CorrelationSeries magnetization_from_modes(const BandedOperator& h,
                                           const std::vector<double>& times) {
  const ProbeSpectral ps = probe_decomposition(h, {1});
  CorrelationSeries s;
  s.site = 0;
  s.times = times;
  s.values.resize(times.size());
  s.std_errors.assign(times.size(), 0.0);
  for (std::size_t it = 0; it < times.size(); ++it) {
    double acc = 0;
    for (int a = 0; a < ps.energies.size(); ++a)
      acc += std::exp(-ps.energies[a] * times[it]) * ps.mode_sums[a] * ps.mode_sums[a];
    s.values[it] = acc;
  }
  return s;
}

}  // namespace slowmode
