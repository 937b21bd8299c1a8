#include "slowmode/powerlaw.hpp"

#include <cmath>
#include <string>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

PowerLawFit wls(const std::vector<double>& lx, const std::vector<double>& ly,
                const std::vector<double>& w) {
  const int n = static_cast<int>(lx.size());
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sw += w[i];
    sx += w[i] * lx[i];
    sy += w[i] * ly[i];
    sxx += w[i] * lx[i] * lx[i];
    sxy += w[i] * lx[i] * ly[i];
  }
  const double det = sw * sxx - sx * sx;
  if (det <= 0) throw WindowError("degenerate fit window");
  PowerLawFit fit;
  fit.exponent = (sw * sxy - sx * sy) / det;
  fit.log_amplitude = (sxx * sy - sx * sxy) / det;
  fit.n_points = n;
  // residual-scaled uncertainty of the slope
  double chi2 = 0;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.log_amplitude + fit.exponent * lx[i]);
    chi2 += w[i] * r * r;
  }
  const double scale = n > 2 ? chi2 / (n - 2) : 0.0;
  fit.exponent_stderr = std::sqrt(std::max(scale, 1e-30) * sw / det);
  return fit;
}

}  // namespace

double PowerLawFit::value_at(double t) const {
  return std::exp(log_amplitude + exponent * std::log(t));
}

PowerLawFit fit_power_law(const CorrelationSeries& s, double t_lo, double t_hi) {
  std::vector<double> lx, ly, w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = s.times[i];
    if (t < t_lo || t > t_hi || t <= 0) continue;
    const double c = s.values[i];
    if (c <= 0)
      throw NonPositiveValue("non-positive value at t=" + std::to_string(t));
    lx.push_back(std::log(t));
    ly.push_back(std::log(c));
    const double se = s.std_errors[i];
    w.push_back(se > 0 ? (c / se) * (c / se) : 1.0);
  }
  if (lx.size() < 8)
    throw WindowError("fit window [" + std::to_string(t_lo) + "," + std::to_string(t_hi) +
                      "] holds " + std::to_string(lx.size()) + " points, need >= 8");
  return wls(lx, ly, w);
}

PowerLawFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw WindowError("need >= 2 points");
  std::vector<double> lx, ly, w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw NonPositiveValue("log-log fit needs positive data");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
    w.push_back(1.0);
  }
  double sw = lx.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double det = sw * sxx - sx * sx;
  if (det <= 0) throw WindowError("degenerate abscissa");
  PowerLawFit fit;
  fit.exponent = (sw * sxy - sx * sy) / det;
  fit.log_amplitude = (sxx * sy - sx * sxy) / det;
  fit.n_points = static_cast<int>(lx.size());
  double chi2 = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.log_amplitude + fit.exponent * lx[i]);
    chi2 += r * r;
  }
  const double scale = fit.n_points > 2 ? chi2 / (fit.n_points - 2) : 0.0;
  fit.exponent_stderr = std::sqrt(std::max(scale, 1e-30) * sw / det);
  return fit;
}

double crossover_time(const PowerLawFit& early, const PowerLawFit& late) {
  const double dslope = early.exponent - late.exponent;
  if (std::abs(dslope) < 1e-12) throw WindowError("parallel power laws never cross");
  return std::exp((late.log_amplitude - early.log_amplitude) / dslope);
}

double front_time(const CorrelationSeries& s, const PowerLawFit& early, double ratio) {
  double prev_t = 0, prev_r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = s.times[i];
    if (t <= 0 || s.values[i] <= 0) continue;
    const double r = s.values[i] / early.value_at(t);
    if (prev_t > 0 && prev_r < ratio && r >= ratio) {
      // interpolate the crossing in log t / log r
      const double f = (std::log(ratio) - std::log(prev_r)) / (std::log(r) - std::log(prev_r));
      return std::exp(std::log(prev_t) + f * (std::log(t) - std::log(prev_t)));
    }
    prev_t = t;
    prev_r = r;
  }
  throw WindowError("front ratio never crossed");
}

}  // namespace slowmode
