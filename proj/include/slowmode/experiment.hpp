#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "slowmode/series.hpp"

namespace slowmode {

/// Files produced by one experiment run plus reproducibility metadata.
struct ResultBundle {
  std::string experiment_id;
  std::vector<std::string> csv_files;
  std::string sidecar_file;
  std::string provenance;  // FNV-1a hash over descriptor + data
  double wall_seconds = 0;
};

nlohmann::json load_descriptor(const std::string& path);
void validate_descriptor(const nlohmann::json& d);

/// Dispatches on d["engine"]: automaton | hydro | continuum | superham |
/// acceptance. Writes CSV series plus a JSON sidecar carrying the full
/// descriptor, toolkit version, wall clock and provenance hash. Idempotent
/// for identical descriptor + seed (bitwise identical outputs).
ResultBundle run_experiment(const nlohmann::json& d, const std::string& out_dir);

/// Runs every *.json descriptor in a directory (sorted by name).
std::vector<ResultBundle> run_all(const std::string& descriptor_dir, const std::string& out_dir);

struct CompareReport {
  long points = 0;
  long within = 0;
  double max_z = 0;
  double fraction() const { return points ? static_cast<double>(within) / points : 1.0; }
  bool pass = false;
};

/// Per-point z-score comparison of two series on identical time grids
/// (throws GridMismatch otherwise). A point passes when |a-b| <= n_sigma *
/// combined stderr; exact match required where both errors vanish.
CompareReport compare_series(const CorrelationSeries& a, const CorrelationSeries& b,
                             double n_sigma, double min_fraction);

std::string fnv1a_hex(const std::string& bytes);

extern const char* kToolkitVersion;

}  // namespace slowmode
