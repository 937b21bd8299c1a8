#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <omp.h>

#include "slowmode/automaton.hpp"
#include "slowmode/errors.hpp"

using namespace slowmode;

TEST_CASE("frozen configurations never move") {
  const auto gs = build_gate_set(Model::U1Half, 6);
  SpinConfiguration c = all_state_configuration(6, 0);
  CounterRng rng(1, 0);
  for (int t = 0; t < 200; ++t) step(c, gs, rng);
  for (auto s : c.states) CHECK(s == 0);
}

TEST_CASE("single bond flips with probability 1/2") {
  const auto gs = build_gate_set(Model::U1Half, 2);
  int flips = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    SpinConfiguration c{{0, 1}};
    CounterRng rng(77, i);
    step(c, gs, rng);
    if (c.states[0] == 1) flips++;
  }
  CHECK(std::abs(flips / double(n) - 0.5) < 0.01);
}

TEST_CASE("state-flip impurity resamples uniformly") {
  const auto gs = build_gate_set(Model::TJz, 2, ImpuritySpec::state_flip({2}));
  // move weights: 1 bond layer + impurity = 1/2 each; condition on the impurity move
  int counts[3] = {0, 0, 0};
  int impurity_draws = 0;
  for (int i = 0; i < 60000; ++i) {
    SpinConfiguration c{{0, 1}};  // site 2 = up
    CounterRng rng(9, i);
    step(c, gs, rng);
    if (c.states[0] == 0) {  // bond layer did not act or swapped back impossible here
      counts[c.states[1]]++;
      impurity_draws++;
    }
  }
  // bond move maps (0,up) -> (up,0) half the time; conditioned on site 1 still 0,
  // site 2 is up unless the impurity resampled it
  CHECK(counts[0] > 0);
  CHECK(counts[2] > 0);
  const double frac_down = counts[2] / double(impurity_draws);
  CHECK(frac_down == doctest::Approx(1.0 / 6.0).epsilon(0.15));  // P(imp) * 1/3
}

TEST_CASE("charge and dipole conservation under bulk-only dynamics") {
  for (Model m : {Model::U1Half, Model::DipHalfW4W5, Model::DipOneH3, Model::DipOneH3H4,
                  Model::TJz}) {
    const int L = 11;
    const auto gs = build_gate_set(m, L);
    for (int trial = 0; trial < 50; ++trial) {
      CounterRng rng(1000 + trial, trial);
      SpinConfiguration c;
      for (int j = 0; j < L; ++j)
        c.states.push_back(static_cast<std::uint8_t>(rng.next_below(local_dim(m))));
      long q0 = 0, p0 = 0;
      for (int j = 0; j < L; ++j) {
        q0 += state_charge(m, c.states[j]);
        p0 += (j + 1) * state_charge(m, c.states[j]);
      }
      for (int t = 0; t < 30; ++t) step(c, gs, rng);
      long q1 = 0, p1 = 0;
      for (int j = 0; j < L; ++j) {
        q1 += state_charge(m, c.states[j]);
        p1 += (j + 1) * state_charge(m, c.states[j]);
      }
      CHECK(q1 == q0);
      if (conserves_dipole(m)) CHECK(p1 == p0);
    }
  }
}

TEST_CASE("sampler t=0 values") {
  SampleOptions opt;
  opt.n_samples = 20000;
  opt.t_max = 2;
  opt.seed = 5;
  // spin-1/2: Z^2 = 1 exactly
  const auto u1 = estimate_autocorrelation(build_gate_set(Model::U1Half, 4), {1}, opt);
  CHECK(u1[0].values[0] == 1.0);
  CHECK(u1[0].std_errors[0] == 0.0);
  // spin-1: (S^z)^2 averages to 2/3
  const auto h3 = estimate_autocorrelation(build_gate_set(Model::DipOneH3, 4), {2}, opt);
  CHECK(std::abs(h3[0].values[0] - 2.0 / 3.0) < 5 * h3[0].std_errors[0] + 1e-12);
}

TEST_CASE("u1 L=2 equilibrates to 1/2 in one step") {
  SampleOptions opt;
  opt.n_samples = 200000;
  opt.t_max = 5;
  opt.seed = 11;
  const auto s = estimate_autocorrelation(build_gate_set(Model::U1Half, 2), {1}, opt);
  for (int t = 1; t <= 5; ++t)
    CHECK(std::abs(s[0].values[t] - 0.5) <= 4 * s[0].std_errors[t]);
}

TEST_CASE("parallel sampler is bit-identical to the serial reference at any thread count") {
  const auto gs = build_gate_set(Model::TJz, 6, ImpuritySpec::state_flip({6}));
  SampleOptions opt;
  opt.n_samples = 30000;
  opt.t_max = 40;
  opt.seed = 314;
  opt.block = 1024;
  const auto ref = estimate_autocorrelation_reference(gs, {1, 3, 6}, opt);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const auto par = estimate_autocorrelation(gs, {1, 3, 6}, opt);
    for (std::size_t p = 0; p < ref.size(); ++p) {
      CHECK(par[p].values == ref[p].values);          // exact: integer accumulators
      CHECK(par[p].std_errors == ref[p].std_errors);
    }
  }
  omp_set_num_threads(2);
}

TEST_CASE("block size never changes results") {
  const auto gs = build_gate_set(Model::U1Half, 8, ImpuritySpec::site_flip(1));
  SampleOptions a, b;
  a.n_samples = b.n_samples = 9999;
  a.t_max = b.t_max = 21;
  a.seed = b.seed = 99;
  a.block = 128;
  b.block = 4096;
  const auto sa = estimate_autocorrelation(gs, {2}, a);
  const auto sb = estimate_autocorrelation(gs, {2}, b);
  CHECK(sa[0].values == sb[0].values);
}

TEST_CASE("magnetization is conserved without impurities") {
  const auto gs = build_gate_set(Model::U1Half, 10);
  SampleOptions opt;
  opt.n_samples = 2000;
  opt.t_max = 50;
  opt.seed = 3;
  const auto s = estimate_magnetization(gs, all_state_configuration(10, 1), opt);
  for (double v : s.values) CHECK(v == 10.0);
}

TEST_CASE("budget guard") {
  SampleOptions opt;
  opt.n_samples = 1000000;
  opt.t_max = 10000;
  opt.budget = 1e9;
  CHECK_THROWS_AS(estimate_autocorrelation(build_gate_set(Model::U1Half, 100), {1}, opt),
                  BudgetError);
}
