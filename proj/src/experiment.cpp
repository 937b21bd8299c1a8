#include "slowmode/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slowmode/acceptance.hpp"
#include "slowmode/asymptotics.hpp"
#include "slowmode/automaton.hpp"
#include "slowmode/banded.hpp"
#include "slowmode/biharmonic.hpp"
#include "slowmode/continuum.hpp"
#include "slowmode/eigensolve.hpp"
#include "slowmode/errors.hpp"
#include "slowmode/krylov.hpp"
#include "slowmode/lanczos.hpp"
#include "slowmode/markov_oracle.hpp"
#include "slowmode/spectral.hpp"
#include "slowmode/superham.hpp"
#include "slowmode/tjz_effective.hpp"
#include "slowmode/tjz_graph.hpp"
#include "slowmode/two_impurity.hpp"

namespace slowmode {

const char* kToolkitVersion = "slowmode 1.0.0";

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError(path + ": " + msg);
}

double num(const json& d, const std::string& key, double fallback = 0, bool required = false) {
  if (!d.contains(key)) {
    if (required) fail(key, "missing");
    return fallback;
  }
  if (!d[key].is_number()) fail(key, "must be a number");
  return d[key].get<double>();
}

std::string str(const json& d, const std::string& key, const std::string& fallback = "",
                bool required = false) {
  if (!d.contains(key)) {
    if (required) fail(key, "missing");
    return fallback;
  }
  return d[key].get<std::string>();
}

// impurity sites may be numbers or the strings "L", "L-1", ..., "L/2"
int resolve_site(const json& v, int L) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "L") return L;
    if (s == "L/2") return L / 2;
    if (s.rfind("L-", 0) == 0) return L - std::stoi(s.substr(2));
  }
  fail("sites", "cannot resolve site " + v.dump());
}

std::vector<int> resolve_sites(const json& arr, int L) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(resolve_site(v, L));
  return out;
}

ImpuritySpec parse_ca_impurity(const json& d, int L) {
  if (!d.contains("impurity")) return ImpuritySpec::none();
  const json& imp = d["impurity"];
  const std::string kind = str(imp, "kind", "none");
  if (kind == "none") return ImpuritySpec::none();
  std::vector<int> sites = resolve_sites(imp.value("sites", json::array()), L);
  if (kind == "site_flip") return {ImpuritySpec::Kind::SiteFlip, sites};
  if (kind == "charge_preserving_swap") return {ImpuritySpec::Kind::ChargePreservingSwap, sites};
  if (kind == "full_breaking_flips") return {ImpuritySpec::Kind::FullBreakingFlips, sites};
  if (kind == "state_flip") return {ImpuritySpec::Kind::StateFlip, sites};
  fail("impurity.kind", "unknown kind " + kind);
}

SuperImpurity parse_super_impurity(const json& d, int L) {
  if (!d.contains("impurity")) return SuperImpurity::none();
  const json& imp = d["impurity"];
  const std::string kind = str(imp, "kind", "none");
  if (kind == "none") return SuperImpurity::none();
  std::vector<int> sites = resolve_sites(imp.value("sites", json::array()), L);
  if (kind == "site_flip") return {SuperImpurity::Kind::SiteFlip, sites};
  if (kind == "charge_preserving_swap") return {SuperImpurity::Kind::ChargePreservingSwap, sites};
  if (kind == "full_breaking_flips") return {SuperImpurity::Kind::FullBreakingFlips, sites};
  if (kind == "state_flip") return {SuperImpurity::Kind::StateFlip, sites};
  fail("impurity.kind", "unknown kind " + kind);
}

std::vector<double> parse_times(const json& d) {
  if (!d.contains("times")) fail("times", "missing");
  const json& t = d["times"];
  const std::string kind = str(t, "kind", "log");
  if (kind == "log")
    return log_time_grid(num(t, "t_min", 1.0), num(t, "t_max", 0, true),
                         static_cast<int>(num(t, "per_decade", 20)));
  if (kind == "integer")
    return integer_time_grid(num(t, "t_max", 0, true),
                             static_cast<int>(num(t, "per_decade", 20)));
  if (kind == "explicit") return t["values"].get<std::vector<double>>();
  fail("times.kind", "unknown kind " + kind);
}

std::vector<int> parse_probes(const json& d, int L) {
  if (!d.contains("probe_sites")) fail("probe_sites", "missing");
  auto sites = resolve_sites(d["probe_sites"], L);
  for (int j : sites)
    if (j < 1 || j > L) fail("probe_sites", "site out of [1,L]");
  return sites;
}

struct Sink {
  fs::path dir;
  std::string id;
  std::vector<std::string> files;
  std::string hash_payload;

  std::string csv_path(const std::string& tag) {
    std::string name = id + (tag.empty() ? "" : "_" + tag) + ".csv";
    files.push_back((dir / name).string());
    return files.back();
  }
  void write_series(const CorrelationSeries& s, const std::string& tag) {
    const std::string path = csv_path(tag);
    write_csv(s, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    hash_payload += buf.str();
  }
  void write_table(const std::string& tag, const std::string& header,
                   const std::vector<std::vector<double>>& rows) {
    const std::string path = csv_path(tag);
    std::ofstream out(path);
    out << header << '\n';
    std::string data = header + "\n";
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i)
        line += (i ? "," : "") + format_double(row[i]);
      out << line << '\n';
      data += line + "\n";
    }
    hash_payload += data;
  }
};

// --- engines -------------------------------------------------------------

void run_automaton(const json& d, Sink& sink) {
  const Model model = model_from_name(str(d, "model", "", true));
  const std::string obs = str(d, "observable", "autocorrelation");

  if (obs == "krylov") {
    // single L, or a subspace-count scan over L_values
    std::vector<int> Ls;
    if (d.contains("L_values"))
      for (const auto& lv : d["L_values"]) Ls.push_back(lv.get<int>());
    else
      Ls.push_back(static_cast<int>(num(d, "L", 0, true)));
    std::vector<std::vector<double>> counts;
    for (int L : Ls) {
      const GateSet gs = build_gate_set(model, L, parse_ca_impurity(d, L));
      const auto rep = enumerate_krylov(gs, static_cast<long>(num(d, "cap", 531441)));
      counts.push_back({static_cast<double>(L), static_cast<double>(rep.subspace_count)});
      if (Ls.size() == 1) {
        std::vector<std::vector<double>> rows;
        for (const auto& [size, count] : rep.size_histogram)
          rows.push_back({static_cast<double>(size), static_cast<double>(count)});
        sink.write_table("krylov_hist", "component_size,count", rows);
      }
    }
    sink.write_table("krylov_count", "L,subspace_count", counts);
    return;
  }

  const int L = static_cast<int>(num(d, "L", 0, true));
  const GateSet gs = build_gate_set(model, L, parse_ca_impurity(d, L));

  SampleOptions opt;
  opt.t_max = static_cast<int>(num(d, "t_max", 0, true));
  opt.n_samples = static_cast<long>(num(d, "n_samples", 100000));
  opt.seed = static_cast<std::uint64_t>(num(d, "seed", 1));
  opt.budget = num(d, "budget", 1e13);
  if (opt.n_samples <= 0) fail("n_samples", "must be positive");

  if (obs == "autocorrelation" || obs == "oracle_autocorrelation") {
    const auto probes = parse_probes(d, L);
    const auto series = obs == "autocorrelation"
                            ? estimate_autocorrelation(gs, probes, opt)
                            : MarkovOracle(gs, static_cast<long>(num(d, "cap", 531441)))
                                  .autocorrelation(probes, opt.t_max);
    for (const auto& s : series) sink.write_series(s, "j" + std::to_string(s.site));
    return;
  }
  if (obs == "magnetization" || obs == "oracle_magnetization") {
    const std::string init = str(d, "initial", "all_up");
    SpinConfiguration c0;
    if (init == "all_up")  // largest-charge local state in all encodings
      c0 = all_state_configuration(L, 1);
    else if (init == "all_zero")
      c0 = all_state_configuration(L, 0);
    else
      fail("initial", "unknown initial state " + init);
    const auto s = obs == "magnetization"
                       ? estimate_magnetization(gs, c0, opt)
                       : MarkovOracle(gs, static_cast<long>(num(d, "cap", 531441)))
                             .magnetization(c0, opt.t_max);
    sink.write_series(s, "mz");
    return;
  }
  fail("observable", "unknown observable " + obs);
}

BandedOperator parse_hydro_operator(const json& d, int L) {
  const std::string model = str(d, "model", "", true);
  if (model == "u1") {
    const Bc bc = str(d, "bc", "obc") == "pbc" ? Bc::Pbc : Bc::Obc;
    if (!d.contains("impurity")) return build_u1(L, bc);
    const json& j = d["impurity"];
    const double g = num(j, "g", 0);
    if (j.contains("sites")) {  // several on-site impurities, same strength
      BandedOperator h = build_u1(L, bc);
      for (int s : resolve_sites(j["sites"], L)) {
        if (s < 1 || s > L) fail("impurity.sites", "site out of [1,L]");
        h.add(s - 1, s - 1, 4.0 * g);
      }
      return h;
    }
    return build_u1(L, bc, U1Impurity{resolve_site(j.value("site", json(1)), L), g});
  }
  if (model == "dipole") {
    DipoleImpurity imp;
    if (d.contains("impurity")) {
      const json& j = d["impurity"];
      const std::string kind = str(j, "kind", "none");
      imp.g = num(j, "g", 0);
      if (kind == "charge_preserving_swap")
        imp.kind = DipoleImpurity::Kind::ChargePreservingSwap;
      else if (kind == "full_breaking")
        imp.kind = DipoleImpurity::Kind::FullBreaking;
      else if (kind != "none")
        fail("impurity.kind", "unknown dipole impurity " + kind);
    }
    return build_dipole(L, num(d, "J4", 1.0), num(d, "J5", 1.0 / std::sqrt(2.0)), imp);
  }
  fail("model", "hydro model must be u1 or dipole");
}

void run_hydro(const json& d, Sink& sink) {
  const int L = static_cast<int>(num(d, "L", 0, true));
  const BandedOperator h = parse_hydro_operator(d, L);
  const std::string out = str(d, "output", "correlation");
  if (out == "correlation") {
    const auto series = spectral_correlation(h, parse_probes(d, L), parse_times(d));
    for (const auto& s : series) sink.write_series(s, "j" + std::to_string(s.site));
    return;
  }
  if (out == "magnetization") {
    sink.write_series(magnetization_from_modes(h, parse_times(d)), "mz");
    return;
  }
  if (out == "spectrum") {
    const Eigen::VectorXd e = eigh_values(h);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < e.size(); ++i) rows.push_back({static_cast<double>(i), e[i]});
    sink.write_table("spectrum", "index,energy", rows);
    return;
  }
  if (out == "modes") {
    const int n_modes = static_cast<int>(num(d, "n_modes", 3));
    const int skip = static_cast<int>(num(d, "skip_zero_modes", 0));
    const EigenDecomposition ed = eigh(h);
    std::vector<std::vector<double>> rows;
    std::string header = "j";
    for (int a = 1; a <= n_modes; ++a) header += ",phi_" + std::to_string(a);
    for (int j = 0; j < L; ++j) {
      std::vector<double> row{static_cast<double>(j + 1)};
      for (int a = 0; a < n_modes; ++a) row.push_back(ed.orbitals(j, skip + a));
      rows.push_back(std::move(row));
    }
    sink.write_table("modes", header, rows);
    return;
  }
  fail("output", "unknown hydro output " + out);
}

void run_continuum(const json& d, Sink& sink) {
  const std::string op = str(d, "operation", "", true);
  if (op == "predict") {
    json laws = json::array();
    for (const auto& law : asymptotic_catalogue()) {
      json e;
      e["symmetry"] = law.symmetry;
      e["impurity"] = law.impurity;
      e["regime"] = law.regime;
      e["exponent"] = law.exponent;
      e["amplitude_formula"] = law.amplitude_formula;
      e["amplitude_exact"] = law.amplitude_exact;
      laws.push_back(e);
    }
    const std::string path = (sink.dir / (sink.id + "_catalogue.json")).string();
    std::ofstream outf(path);
    outf << laws.dump(2) << '\n';
    sink.files.push_back(path);
    sink.hash_payload += laws.dump();
    return;
  }
  if (op == "modes") {
    const double L = num(d, "L", 0, true);
    const std::string bcs = str(d, "bc", "", true);
    const BiharmonicBc bc = bcs == "symmetric"           ? BiharmonicBc::SymmetricQP
                            : bcs == "charge_preserving" ? BiharmonicBc::ChargePreserving
                                                         : BiharmonicBc::FullyBreaking;
    const auto fam = biharmonic_modes(L, bc, static_cast<int>(num(d, "n_modes", 3)));
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < fam.k.size(); ++n)
      rows.push_back({static_cast<double>(n + 1), fam.k[n], fam.k[n] * L / M_PI,
                      fam.quantization_residual(static_cast<int>(n))});
    sink.write_table("roots", "n,k,kL_over_pi,residual", rows);
    return;
  }
  ContinuumParams p;
  p.D = num(d, "D", 1.0);
  p.g = num(d, "g", 0.0);
  p.x = num(d, "x", 1.0);
  p.x0 = num(d, "x0", 1.0);
  p.xs = num(d, "xs", 0.0);
  const std::string geom_name = str(d, "geometry", "infinite");
  const SubdiffusionGeometry geom =
      geom_name == "semi_symmetric"           ? SubdiffusionGeometry::SemiSymmetric
      : geom_name == "semi_charge_preserving" ? SubdiffusionGeometry::SemiChargePreserving
      : geom_name == "semi_fully_breaking"    ? SubdiffusionGeometry::SemiFullyBreaking
                                              : SubdiffusionGeometry::Infinite;
  CorrelationSeries s;
  s.site = 0;
  s.times = parse_times(d);
  for (double t : s.times) {
    p.t = t;
    double v = 0;
    if (op == "sink")
      v = diffusion_with_sink(p);
    else if (op == "boundary")
      v = diffusion_boundary_impurity(p);
    else if (op == "kernel")
      v = subdiffusion_kernel(p, geom);
    else
      fail("operation", "unknown continuum operation " + op);
    s.values.push_back(v);
    s.std_errors.push_back(0.0);
  }
  sink.write_series(s, op);
}

void run_superham(const json& d, Sink& sink) {
  const std::string op = str(d, "operation", "", true);
  const double g = num(d, "g", 1.0);
  const long cap = static_cast<long>(num(d, "cap", 19683));

  auto exact_gap = [&](int L) {
    const SuperModel model = super_model_from_name(str(d, "model", "", true));
    const auto P = build_super_hamiltonian(model, L, parse_super_impurity(d, L), g, cap);
    LanczosOptions opt;
    opt.nev = 1;
    opt.deflate = {state_identity(super_local_dim(model), L)};
    opt.tol = 1e-12;
    opt.want_vectors = false;
    return lowest_eigenpairs(P, opt).values[0];
  };

  if (op == "gap_scan" || op == "sliom_hopping_scan" || op == "heff_two_impurity_scan") {
    if (!d.contains("L_values")) fail("L_values", "missing");
    std::vector<std::vector<double>> rows;
    for (const auto& lv : d["L_values"]) {
      const int L = lv.get<int>();
      double gap = 0;
      if (op == "gap_scan")
        gap = exact_gap(L);
      else if (op == "sliom_hopping_scan")
        gap = sliom_hopping_gap(L);
      else
        gap = heff_two_impurity_gap(L);
      rows.push_back({static_cast<double>(L), gap});
    }
    sink.write_table("gaps", "L,gap", rows);
    return;
  }
  const int L = static_cast<int>(num(d, "L", 0, true));
  if (op == "gap") {
    sink.write_table("gap", "L,gap", {{static_cast<double>(L), exact_gap(L)}});
    return;
  }
  if (op == "kernel_dim") {
    const SuperModel model = super_model_from_name(str(d, "model", "", true));
    const auto P = build_super_hamiltonian(model, L, parse_super_impurity(d, L), g, cap);
    sink.write_table("kernel", "L,kernel_dim",
                     {{static_cast<double>(L), static_cast<double>(kernel_dimension_dense(P))}});
    return;
  }
  if (op == "spectrum") {
    const SuperModel model = super_model_from_name(str(d, "model", "", true));
    const auto P = build_super_hamiltonian(model, L, parse_super_impurity(d, L), g, cap);
    const int nev = static_cast<int>(num(d, "nev", 4));
    LanczosOptions opt;
    opt.nev = nev;
    opt.tol = 1e-12;
    opt.want_vectors = false;
    const auto r = lowest_eigenpairs(P, opt);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < nev; ++i) rows.push_back({static_cast<double>(i), r.values[i]});
    sink.write_table("spectrum", "index,energy", rows);
    return;
  }
  if (op == "effective_correlation") {
    const auto series = effective_correlation_tjz(L, parse_probes(d, L), parse_times(d), g);
    for (const auto& s : series) sink.write_series(s, "j" + std::to_string(s.site));
    return;
  }
  if (op == "hk_spectrum") {
    const int k = static_cast<int>(num(d, "k", 1));
    const auto ek = eigh(build_effective_hk(L, k));
    const auto q = qk_coefficients(L, k);
    const double ov = std::pow(q.dot(ek.vectors.col(0)), 2);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < std::min<int>(static_cast<int>(ek.values.size()), 8); ++i)
      rows.push_back({static_cast<double>(i), ek.values[i]});
    sink.write_table("hk_spectrum", "index,lambda", rows);
    sink.write_table("hk_overlap", "L,k,overlap_sq_qk",
                     {{static_cast<double>(L), static_cast<double>(k), ov}});
    return;
  }
  if (op == "parent_h0") {
    const auto e = eigh(build_parent_h0(L)).values;
    const auto exact = parent_h0_exact_spectrum(L);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= L; ++i) rows.push_back({static_cast<double>(i), e[i], exact[i]});
    sink.write_table("parent_h0", "index,energy,exact", rows);
    return;
  }
  if (op == "graph_laplacian") {
    const auto pg = graph_laplacian_tjz(L);
    LanczosOptions opt;
    opt.nev = 2;
    opt.tol = 1e-12;
    opt.want_vectors = false;
    const auto r = lowest_eigenpairs(pg.laplacian, opt);
    sink.write_table("graph", "L,lambda1,cheeger_upper,conductance",
                     {{static_cast<double>(L), r.values[1], pg.cheeger_upper,
                       pg.conductance_cut}});
    return;
  }
  if (op == "variational") {
    std::vector<std::vector<double>> rows;
    for (int k = 1; k <= L; ++k)
      rows.push_back({static_cast<double>(k), sliom_variational_energy_tjz(L, k, L, g)});
    sink.write_table("variational", "k,delta_var", rows);
    return;
  }
  fail("operation", "unknown superham operation " + op);
}

}  // namespace

json load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open descriptor " + path);
  json d = json::parse(in, nullptr, true, true);  // comments allowed
  validate_descriptor(d);
  return d;
}

void validate_descriptor(const json& d) {
  if (!d.is_object()) throw ValidationError("descriptor must be a JSON object");
  if (!d.contains("experiment_id") || !d["experiment_id"].is_string())
    throw ValidationError("experiment_id: missing or not a string");
  const std::string engine = str(d, "engine", "", true);
  if (engine != "automaton" && engine != "hydro" && engine != "continuum" &&
      engine != "superham" && engine != "acceptance")
    throw ValidationError("engine: unknown engine " + engine);
  if (d.contains("times")) {
    const json& t = d["times"];
    if (t.contains("t_min") && t.contains("t_max") &&
        !(t["t_min"].get<double>() < t["t_max"].get<double>()))
      throw ValidationError("times: grid must be increasing");
  }
}

ResultBundle run_experiment(const json& d, const std::string& out_dir) {
  validate_descriptor(d);
  const auto t0 = std::chrono::steady_clock::now();
  fs::create_directories(out_dir);

  Sink sink;
  sink.dir = out_dir;
  sink.id = d["experiment_id"].get<std::string>();

  const std::string engine = d["engine"].get<std::string>();
  if (engine == "automaton")
    run_automaton(d, sink);
  else if (engine == "hydro")
    run_hydro(d, sink);
  else if (engine == "continuum")
    run_continuum(d, sink);
  else if (engine == "superham")
    run_superham(d, sink);
  else if (engine == "acceptance") {
    const auto rep = d.contains("criterion") && d["criterion"].is_number()
                         ? std::vector<CriterionReport>{run_criterion(d["criterion"].get<int>())}
                         : run_all_criteria(nullptr);
    std::vector<std::vector<double>> rows;
    for (const auto& r : rep)
      rows.push_back({static_cast<double>(r.id), r.pass ? 1.0 : 0.0, r.seconds});
    sink.write_table("criteria", "criterion,pass,seconds", rows);
  }

  ResultBundle bundle;
  bundle.experiment_id = sink.id;
  bundle.csv_files = sink.files;
  bundle.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bundle.provenance = fnv1a_hex(d.dump() + sink.hash_payload);

  json sidecar;
  sidecar["descriptor"] = d;
  sidecar["toolkit_version"] = kToolkitVersion;
  sidecar["wall_seconds"] = bundle.wall_seconds;
  sidecar["provenance"] = bundle.provenance;
  sidecar["files"] = bundle.csv_files;
  bundle.sidecar_file = (fs::path(out_dir) / (sink.id + ".meta.json")).string();
  std::ofstream out(bundle.sidecar_file);
  out << sidecar.dump(2) << '\n';
  return bundle;
}

std::vector<ResultBundle> run_all(const std::string& descriptor_dir, const std::string& out_dir) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(descriptor_dir))
    if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw ValidationError("no descriptors in " + descriptor_dir);
  std::vector<ResultBundle> out;
  for (const auto& p : paths) out.push_back(run_experiment(load_descriptor(p), out_dir));
  return out;
}

CompareReport compare_series(const CorrelationSeries& a, const CorrelationSeries& b,
                             double n_sigma, double min_fraction) {
  if (a.size() != b.size()) throw GridMismatch("series lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a.times[i] - b.times[i]) > 1e-9 * std::max(1.0, std::abs(a.times[i])))
      throw GridMismatch("time grids differ at index " + std::to_string(i));
  CompareReport rep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double se = std::hypot(a.std_errors[i], b.std_errors[i]);
    const double diff = std::abs(a.values[i] - b.values[i]);
    ++rep.points;
    if (se == 0) {
      if (diff == 0) ++rep.within;
      rep.max_z = std::max(rep.max_z, diff == 0 ? 0.0 : 1e300);
    } else {
      if (diff <= n_sigma * se) ++rep.within;
      rep.max_z = std::max(rep.max_z, diff / se);
    }
  }
  rep.pass = rep.fraction() >= min_fraction;
  return rep;
}

}  // namespace slowmode
