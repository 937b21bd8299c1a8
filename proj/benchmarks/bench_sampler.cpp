// Throughput comparison of the serial reference sampler against the
// OpenMP-parallel one. The two must agree bit for bit; this target reports
// the speed difference.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "slowmode/automaton.hpp"

using namespace slowmode;

namespace {

double time_once(const char* tag, int threads, bool parallel, const GateSet& gs,
                 const std::vector<int>& probes, const SampleOptions& opt) {
  omp_set_num_threads(threads);
  const auto t0 = std::chrono::steady_clock::now();
  const auto series = parallel ? estimate_autocorrelation(gs, probes, opt)
                               : estimate_autocorrelation_reference(gs, probes, opt);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double rate = opt.n_samples * static_cast<double>(opt.t_max) / dt;
  std::printf("%-26s %8.2fs  %10.3g sample-steps/s   C(j=%d, t=%d) = %.6f\n", tag, dt, rate,
              probes[0], opt.t_max, series[0].values[opt.t_max]);
  return dt;
}

}  // namespace

int main() {
  const int max_threads = omp_get_max_threads();
  struct Case {
    const char* name;
    Model model;
    int L;
    ImpuritySpec imp;
  };
  const Case cases[] = {
      {"u1 L=64 flip@1", Model::U1Half, 64, ImpuritySpec::site_flip(1)},
      {"w4w5 L=64 swap@(1,2)", Model::DipHalfW4W5, 64, ImpuritySpec::swap_at(1)},
      {"tjz L=48 state_flip@L", Model::TJz, 48, ImpuritySpec::state_flip({48})},
  };
  for (const auto& cs : cases) {
    const auto gs = build_gate_set(cs.model, cs.L, cs.imp);
    SampleOptions opt;
    opt.n_samples = 100000;
    opt.t_max = 256;
    opt.seed = 7;
    const std::vector<int> probes = {1, cs.L / 2};
    std::printf("-- %s, %ld samples x %d steps\n", cs.name, opt.n_samples, opt.t_max);
    const double serial = time_once("serial reference", 1, false, gs, probes, opt);
    const double omp1 = time_once("omp (1 thread)", 1, true, gs, probes, opt);
    const double ompN = time_once("omp (max threads)", max_threads, true, gs, probes, opt);
    std::printf("   speedup vs serial: x%.2f (1 thread x%.2f)\n\n", serial / ompN,
                serial / omp1);
  }
  return 0;
}
