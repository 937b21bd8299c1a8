#include "slowmode/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <omp.h>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

void apply_rule(SpinConfiguration& c, const GateRule& rule, int m, CounterRng& rng) {
  switch (rule.kind) {
    case GateRule::Kind::PairFlip: {
      const bool fire = rng.next_double() < rule.flip_probability;
      if (!fire) return;
      for (const auto& [a, b] : rule.pairs) {
        bool is_a = true, is_b = true;
        for (std::size_t i = 0; i < rule.support.size(); ++i) {
          const std::uint8_t s = c.states[rule.support[i]];
          is_a &= (s == a[i]);
          is_b &= (s == b[i]);
        }
        if (is_a) {
          for (std::size_t i = 0; i < rule.support.size(); ++i) c.states[rule.support[i]] = b[i];
          return;
        }
        if (is_b) {
          for (std::size_t i = 0; i < rule.support.size(); ++i) c.states[rule.support[i]] = a[i];
          return;
        }
      }
      return;
    }
    case GateRule::Kind::Shift: {
      const int dir = rng.next_bit() ? +1 : -1;
      for (std::size_t i = 0; i < rule.support.size(); ++i) {
        const int v = c.states[rule.support[i]] + dir * rule.shift[i];
        if (v < 0 || v >= m) return;
      }
      for (std::size_t i = 0; i < rule.support.size(); ++i)
        c.states[rule.support[i]] = static_cast<std::uint8_t>(c.states[rule.support[i]] +
                                                              dir * rule.shift[i]);
      return;
    }
    case GateRule::Kind::Resample:
      c.states[rule.support[0]] = static_cast<std::uint8_t>(rng.next_below(m));
      return;
  }
}

int draw_move(const GateSet& gs, CounterRng& rng) {
  const double u = rng.next_double();
  double acc = 0;
  const int n = gs.move_count();
  for (int i = 0; i < n; ++i) {
    acc += gs.layer_weights[i];
    if (u < acc) return i;
  }
  return n - 1;
}

void apply_move(SpinConfiguration& c, const GateSet& gs, int move, int m, CounterRng& rng) {
  const auto& rules = move < static_cast<int>(gs.bulk_layers.size())
                          ? gs.bulk_layers[move]
                          : gs.impurity_rules;
  for (const auto& rule : rules) apply_rule(c, rule, m, rng);
}

std::string series_meta(const GateSet& gs, const SampleOptions& opt) {
  std::ostringstream os;
  os << "{\"model\":\"" << model_name(gs.model) << "\",\"L\":" << gs.L << ",\"impurity\":\""
     << gs.impurity.to_string() << "\",\"n_samples\":" << opt.n_samples
     << ",\"seed\":" << opt.seed << "}";
  return os.str();
}

void check_budget(const GateSet& gs, const SampleOptions& opt) {
  if (opt.n_samples < 1) throw ValidationError("n_samples must be positive");
  const double work = static_cast<double>(opt.t_max) * gs.L * static_cast<double>(opt.n_samples);
  if (work > opt.budget)
    throw BudgetError("t_max*L*n_samples = " + std::to_string(work) + " exceeds budget " +
                      std::to_string(opt.budget));
}

// One realization of an autocorrelation trajectory: accumulates
// O_j(t) O_j(0) for every probe and t = 0..t_max into (sum, sumsq).
// Products lie in {-1,0,1}, so integer accumulation is exact and
// order-independent.
void run_autocorr_sample(const GateSet& gs, const std::vector<int>& probes0, int t_max,
                         std::uint64_t seed, long sample, std::int64_t* sum,
                         std::int64_t* sumsq) {
  const int m = local_dim(gs.model);
  const int P = static_cast<int>(probes0.size());
  CounterRng rng(seed, static_cast<std::uint64_t>(sample));
  SpinConfiguration c;
  c.states.resize(gs.L);
  for (int j = 0; j < gs.L; ++j) c.states[j] = static_cast<std::uint8_t>(rng.next_below(m));

  std::vector<int> o0(P);
  for (int p = 0; p < P; ++p) o0[p] = state_charge(gs.model, c.states[probes0[p]]);
  for (int p = 0; p < P; ++p) {
    const int prod = o0[p] * o0[p];
    sum[p] += prod;
    sumsq[p] += prod * prod;
  }
  for (int t = 1; t <= t_max; ++t) {
    const int move = draw_move(gs, rng);
    apply_move(c, gs, move, m, rng);
    std::int64_t* srow = sum + static_cast<std::size_t>(t) * P;
    std::int64_t* qrow = sumsq + static_cast<std::size_t>(t) * P;
    for (int p = 0; p < P; ++p) {
      const int prod = state_charge(gs.model, c.states[probes0[p]]) * o0[p];
      srow[p] += prod;
      qrow[p] += prod * prod;
    }
  }
}

std::vector<CorrelationSeries> assemble_series(const GateSet& gs, const std::vector<int>& probes,
                                               const SampleOptions& opt,
                                               const std::vector<std::int64_t>& sum,
                                               const std::vector<std::int64_t>& sumsq) {
  const int P = static_cast<int>(probes.size());
  const long n = opt.n_samples;
  std::vector<CorrelationSeries> out(probes.size());
  for (int p = 0; p < P; ++p) {
    CorrelationSeries& s = out[p];
    s.site = probes[p];
    s.meta_json = series_meta(gs, opt);
    s.times.resize(opt.t_max + 1);
    s.values.resize(opt.t_max + 1);
    s.std_errors.resize(opt.t_max + 1);
    for (int t = 0; t <= opt.t_max; ++t) {
      const double S = static_cast<double>(sum[static_cast<std::size_t>(t) * P + p]);
      const double Q = static_cast<double>(sumsq[static_cast<std::size_t>(t) * P + p]);
      const double mean = S / n;
      double sem = 0;
      if (n > 1) {
        const double var = std::max(0.0, (Q - S * S / n) / (n - 1));
        sem = std::sqrt(var / n);
      }
      s.times[t] = t;
      s.values[t] = mean;
      s.std_errors[t] = sem;
    }
  }
  return out;
}

}  // namespace

void step(SpinConfiguration& config, const GateSet& gs, CounterRng& rng) {
  if (config.size() != gs.L) throw ValidationError("configuration length != L");
  apply_move(config, gs, draw_move(gs, rng), local_dim(gs.model), rng);
}

std::vector<CorrelationSeries> estimate_autocorrelation(const GateSet& gs,
                                                        const std::vector<int>& probe_sites,
                                                        const SampleOptions& opt) {
  check_budget(gs, opt);
  std::vector<int> probes0;
  for (int j : probe_sites) {
    if (j < 1 || j > gs.L) throw ValidationError("probe site out of [1,L]");
    probes0.push_back(j - 1);
  }
  const int P = static_cast<int>(probes0.size());
  const std::size_t rows = static_cast<std::size_t>(opt.t_max + 1) * P;
  const long n_blocks = (opt.n_samples + opt.block - 1) / opt.block;

  // one accumulator pane per fixed sample block; panes are merged in block
  // order, so the totals do not depend on which thread ran which block
  std::vector<std::int64_t> block_acc(2 * rows * static_cast<std::size_t>(n_blocks), 0);
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < n_blocks; ++b) {
    std::int64_t* sum = block_acc.data() + 2 * rows * static_cast<std::size_t>(b);
    std::int64_t* sumsq = sum + rows;
    const long lo = b * opt.block;
    const long hi = std::min<long>(opt.n_samples, lo + opt.block);
    for (long s = lo; s < hi; ++s)
      run_autocorr_sample(gs, probes0, opt.t_max, opt.seed, s, sum, sumsq);
  }

  std::vector<std::int64_t> sum(rows, 0), sumsq(rows, 0);
  for (long b = 0; b < n_blocks; ++b) {
    const std::int64_t* src = block_acc.data() + 2 * rows * static_cast<std::size_t>(b);
    for (std::size_t i = 0; i < rows; ++i) sum[i] += src[i];
    for (std::size_t i = 0; i < rows; ++i) sumsq[i] += src[rows + i];
  }
  return assemble_series(gs, probe_sites, opt, sum, sumsq);
}

std::vector<CorrelationSeries> estimate_autocorrelation_reference(
    const GateSet& gs, const std::vector<int>& probe_sites, const SampleOptions& opt) {
  check_budget(gs, opt);
  std::vector<int> probes0;
  for (int j : probe_sites) {
    if (j < 1 || j > gs.L) throw ValidationError("probe site out of [1,L]");
    probes0.push_back(j - 1);
  }
  const std::size_t rows = static_cast<std::size_t>(opt.t_max + 1) * probes0.size();
  std::vector<std::int64_t> sum(rows, 0), sumsq(rows, 0);
  for (long s = 0; s < opt.n_samples; ++s)
    run_autocorr_sample(gs, probes0, opt.t_max, opt.seed, s, sum.data(), sumsq.data());
  return assemble_series(gs, probe_sites, opt, sum, sumsq);
}

CorrelationSeries estimate_magnetization(const GateSet& gs, const SpinConfiguration& initial,
                                         const SampleOptions& opt) {
  check_budget(gs, opt);
  if (initial.size() != gs.L) throw ValidationError("initial configuration length != L");
  const int m = local_dim(gs.model);
  for (auto s : initial.states)
    if (s >= m) throw ValidationError("initial state out of range");

  const std::size_t rows = static_cast<std::size_t>(opt.t_max + 1);
  const long n_blocks = (opt.n_samples + opt.block - 1) / opt.block;
  std::vector<std::int64_t> block_acc(2 * rows * static_cast<std::size_t>(n_blocks), 0);

#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < n_blocks; ++b) {
    std::int64_t* sum = block_acc.data() + 2 * rows * static_cast<std::size_t>(b);
    std::int64_t* sumsq = sum + rows;
    const long lo = b * opt.block;
    const long hi = std::min<long>(opt.n_samples, lo + opt.block);
    for (long smp = lo; smp < hi; ++smp) {
      CounterRng rng(opt.seed, static_cast<std::uint64_t>(smp));
      SpinConfiguration c = initial;
      long mz = 0;
      for (int j = 0; j < gs.L; ++j) mz += state_charge(gs.model, c.states[j]);
      sum[0] += mz;
      sumsq[0] += mz * mz;
      for (int t = 1; t <= opt.t_max; ++t) {
        apply_move(c, gs, draw_move(gs, rng), m, rng);
        mz = 0;
        for (int j = 0; j < gs.L; ++j) mz += state_charge(gs.model, c.states[j]);
        sum[t] += mz;
        sumsq[t] += mz * mz;
      }
    }
  }

  CorrelationSeries out;
  out.site = 0;
  out.meta_json = series_meta(gs, opt);
  out.times.resize(rows);
  out.values.resize(rows);
  out.std_errors.resize(rows);
  const long n = opt.n_samples;
  for (std::size_t t = 0; t < rows; ++t) {
    std::int64_t S = 0, Q = 0;
    for (long b = 0; b < n_blocks; ++b) {
      const std::int64_t* src = block_acc.data() + 2 * rows * static_cast<std::size_t>(b);
      S += src[t];
      Q += src[rows + t];
    }
    const double mean = static_cast<double>(S) / n;
    double sem = 0;
    if (n > 1) {
      const double var =
          std::max(0.0, (static_cast<double>(Q) - static_cast<double>(S) * S / n) / (n - 1));
      sem = std::sqrt(var / n);
    }
    out.times[t] = static_cast<double>(t);
    out.values[t] = mean;
    out.std_errors[t] = sem;
  }
  return out;
}

}  // namespace slowmode
