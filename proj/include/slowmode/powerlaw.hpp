#pragma once

#include <vector>

#include "slowmode/series.hpp"

namespace slowmode {

struct PowerLawFit {
  double exponent = 0;
  double exponent_stderr = 0;
  double log_amplitude = 0;  // fit is log C = log_amplitude + exponent * log t
  int n_points = 0;

  double value_at(double t) const;
};

/// Weighted least squares of log C vs log t on t in [t_lo, t_hi].
/// Weights from std_errors when present; needs >= 8 points, all values > 0.
PowerLawFit fit_power_law(const CorrelationSeries& s, double t_lo, double t_hi);

/// Generic log-log fit of y vs x (used for t_tran vs j etc.).
PowerLawFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Intersection time of two fitted power laws.
double crossover_time(const PowerLawFit& early, const PowerLawFit& late);

/// First time the series exceeds `ratio` times the early-fit line
/// (log-interpolated). Used for amplitude-crossover fronts.
double front_time(const CorrelationSeries& s, const PowerLawFit& early, double ratio = 1.5);

}  // namespace slowmode
