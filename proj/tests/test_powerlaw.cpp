#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slowmode/errors.hpp"
#include "slowmode/powerlaw.hpp"
#include "slowmode/series.hpp"

using namespace slowmode;

namespace {

CorrelationSeries synthetic(double amp, double expn, double sigma_rel = 0.0) {
  CorrelationSeries s;
  for (double t : log_time_grid(1.0, 1e4, 15)) {
    s.times.push_back(t);
    const double v = amp * std::pow(t, expn);
    s.values.push_back(v);
    s.std_errors.push_back(sigma_rel * v);
  }
  return s;
}

}  // namespace

TEST_CASE("recovers a pure power law exactly") {
  const auto fit = fit_power_law(synthetic(0.3, -1.5), 1.0, 1e4);
  CHECK(fit.exponent == doctest::Approx(-1.5).epsilon(1e-10));
  CHECK(std::exp(fit.log_amplitude) == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(fit.exponent_stderr < 1e-6);
}

TEST_CASE("weights follow the relative errors") {
  auto s = synthetic(1.0, -0.5, 0.01);
  // corrupt one point but give it a huge error bar: the fit must ignore it
  s.values[10] *= 5.0;
  s.std_errors[10] = s.values[10] * 100.0;
  const auto fit = fit_power_law(s, 1.0, 1e4);
  CHECK(fit.exponent == doctest::Approx(-0.5).epsilon(1e-3));
}

TEST_CASE("window and positivity errors") {
  const auto s = synthetic(1.0, -1.0);
  CHECK_THROWS_AS(fit_power_law(s, 1.0, 1.5), WindowError);  // < 8 points
  auto bad = s;
  bad.values[5] = 0.0;
  CHECK_THROWS_AS(fit_power_law(bad, 1.0, 1e4), NonPositiveValue);
}

TEST_CASE("crossover time of two lines") {
  PowerLawFit early, late;
  early.exponent = -0.5;
  early.log_amplitude = std::log(2.0);
  late.exponent = -1.5;
  late.log_amplitude = std::log(200.0);
  // 2 t^-1/2 = 200 t^-3/2 -> t = 100
  CHECK(crossover_time(early, late) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK_THROWS_AS(crossover_time(early, early), WindowError);
}

TEST_CASE("front detection on a synthetic amplitude doubling") {
  CorrelationSeries s;
  const double t_front = 500.0;
  for (double t : log_time_grid(1.0, 1e6, 40)) {
    s.times.push_back(t);
    const double amp = t < t_front ? 1.0 : 2.0;
    s.values.push_back(amp * std::pow(t, -0.25));
    s.std_errors.push_back(0.0);
  }
  PowerLawFit early;
  early.exponent = -0.25;
  early.log_amplitude = 0.0;
  const double tf = front_time(s, early, 1.5);
  CHECK(tf > 400.0);
  CHECK(tf < 650.0);
}

TEST_CASE("log-log fit of scattered points") {
  std::vector<double> x = {4, 8, 16, 32}, y;
  for (double v : x) y.push_back(3.0 * v * v);
  const auto fit = fit_loglog(x, y);
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-12));
}
