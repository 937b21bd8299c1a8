#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "slowmode/acceptance.hpp"
#include "slowmode/asymptotics.hpp"
#include "slowmode/automaton.hpp"
#include "slowmode/errors.hpp"
#include "slowmode/experiment.hpp"
#include "slowmode/krylov.hpp"
#include "slowmode/series.hpp"

using namespace slowmode;

int main(int argc, char** argv) {
  CLI::App app{"slowmode: relaxation dynamics of constrained lattice models with impurities"};
  app.require_subcommand(1);

  int workers = 0;
  app.add_option("--workers", workers,
                 "worker threads (affects speed only, never numerical output)");

  // run
  auto* run = app.add_subcommand("run", "run one experiment descriptor");
  std::string descriptor_path, out_dir = "out";
  run->add_option("descriptor", descriptor_path, "JSON descriptor path")->required();
  run->add_option("-o,--out", out_dir, "output directory");

  // run-all
  auto* runall = app.add_subcommand("run-all", "run every descriptor in a directory");
  std::string dir;
  runall->add_option("dir", dir, "descriptor directory")->required();
  runall->add_option("-o,--out", out_dir, "output directory");

  // compare
  auto* cmp = app.add_subcommand("compare", "z-score comparison of two series CSVs");
  std::string csv_a, csv_b;
  double sigma = 4.0, min_frac = 0.99;
  cmp->add_option("a", csv_a)->required();
  cmp->add_option("b", csv_b)->required();
  cmp->add_option("--sigma", sigma, "allowed deviation in combined standard errors");
  cmp->add_option("--min-frac", min_frac, "required fraction of points within sigma");

  // predict
  auto* predict = app.add_subcommand("predict", "asymptotic-law catalogue");
  std::string symmetry, impurity, regime;
  double pD = 1, pg = 1, px = 1, px0 = 1, pt = 0;
  predict->add_option("--symmetry", symmetry);
  predict->add_option("--impurity", impurity);
  predict->add_option("--regime", regime);
  predict->add_option("--D", pD);
  predict->add_option("--g", pg);
  predict->add_option("--x", px);
  predict->add_option("--x0", px0);
  predict->add_option("--t", pt, "evaluate the law at this time");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Krylov subspace count of a gate set");
  std::string model_name_s = "tjz", imp_kind = "none";
  int eL = 6;
  long cap = 531441;
  std::vector<std::string> imp_sites;
  enumerate->add_option("--model", model_name_s,
                        "u1_half|dip_half_w4w5|dip_one_h3|dip_one_h3h4|tjz");
  enumerate->add_option("--L", eL)->required();
  enumerate->add_option("--impurity", imp_kind,
                        "none|site_flip|charge_preserving_swap|full_breaking_flips|state_flip");
  enumerate->add_option("--sites", imp_sites, "impurity sites (1-based; L and L-1 allowed)");
  enumerate->add_option("--cap", cap, "state-count cap");

  // acceptance
  auto* accept = app.add_subcommand("acceptance", "run acceptance criteria");
  int criterion = 0;
  accept->add_option("--criterion", criterion, "criterion number (default: all)");

  CLI11_PARSE(app, argc, argv);
  if (workers > 0) omp_set_num_threads(workers);

  try {
    if (*run) {
      const auto bundle = run_experiment(load_descriptor(descriptor_path), out_dir);
      std::printf("%s: %zu file(s), %.1fs, provenance %s\n", bundle.experiment_id.c_str(),
                  bundle.csv_files.size(), bundle.wall_seconds, bundle.provenance.c_str());
      return 0;
    }
    if (*runall) {
      const auto bundles = run_all(dir, out_dir);
      for (const auto& b : bundles)
        std::printf("%-40s %6.1fs  %s\n", b.experiment_id.c_str(), b.wall_seconds,
                    b.provenance.c_str());
      return 0;
    }
    if (*cmp) {
      const auto rep = compare_series(read_csv(csv_a), read_csv(csv_b), sigma, min_frac);
      std::printf("points %ld, within %.1f sigma: %ld (%.4f%%), max z %.3g -> %s\n", rep.points,
                  sigma, rep.within, 100 * rep.fraction(), rep.max_z,
                  rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }
    if (*predict) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& law : asymptotic_catalogue()) {
        if (!symmetry.empty() && law.symmetry != symmetry) continue;
        if (!impurity.empty() && law.impurity != impurity) continue;
        if (!regime.empty() && law.regime != regime) continue;
        nlohmann::json e;
        e["symmetry"] = law.symmetry;
        e["impurity"] = law.impurity;
        e["regime"] = law.regime;
        e["exponent"] = law.exponent;
        e["amplitude_formula"] = law.amplitude_formula;
        e["amplitude_exact"] = law.amplitude_exact;
        if (pt > 0) {
          ContinuumParams p;
          p.D = pD;
          p.g = pg;
          p.x = px;
          p.x0 = px0;
          p.t = pt;
          e["value"] = law.value(p);
        }
        out.push_back(e);
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (*enumerate) {
      std::vector<int> sites;
      for (const auto& s : imp_sites) {
        if (s == "L")
          sites.push_back(eL);
        else if (s.rfind("L-", 0) == 0)
          sites.push_back(eL - std::stoi(s.substr(2)));
        else
          sites.push_back(std::stoi(s));
      }
      ImpuritySpec spec;
      if (imp_kind == "none")
        spec = ImpuritySpec::none();
      else if (imp_kind == "site_flip")
        spec = {ImpuritySpec::Kind::SiteFlip, sites};
      else if (imp_kind == "charge_preserving_swap")
        spec = {ImpuritySpec::Kind::ChargePreservingSwap, sites};
      else if (imp_kind == "full_breaking_flips")
        spec = {ImpuritySpec::Kind::FullBreakingFlips, sites};
      else if (imp_kind == "state_flip")
        spec = {ImpuritySpec::Kind::StateFlip, sites};
      else
        throw ValidationError("unknown impurity kind " + imp_kind);
      const auto gs = build_gate_set(model_from_name(model_name_s), eL, spec);
      const auto rep = enumerate_krylov(gs, cap);
      std::printf("model %s L=%d impurity %s: %ld Krylov subspaces\n", model_name_s.c_str(), eL,
                  gs.impurity.to_string().c_str(), rep.subspace_count);
      std::printf("size histogram (size x count):");
      int shown = 0;
      for (auto it = rep.size_histogram.rbegin();
           it != rep.size_histogram.rend() && shown < 12; ++it, ++shown)
        std::printf(" %ldx%ld", it->first, it->second);
      std::printf(rep.size_histogram.size() > 12 ? " ...\n" : "\n");
      return 0;
    }
    if (*accept) {
      if (criterion > 0) {
        const auto r = run_criterion(criterion);
        std::printf("%s criterion %d (%s) [%ds]\n%s", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), static_cast<int>(r.seconds), r.details.c_str());
        return r.pass ? 0 : 1;
      }
      const auto reports = run_all_criteria(&std::cout);
      int failures = 0;
      for (const auto& r : reports) failures += r.pass ? 0 : 1;
      std::printf("%d/%zu criteria passed\n", static_cast<int>(reports.size()) - failures,
                  reports.size());
      return failures;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
