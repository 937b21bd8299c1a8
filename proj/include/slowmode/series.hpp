#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace slowmode {

/// Time series of a correlation (or magnetization) estimate with errors.
struct CorrelationSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> std_errors;
  int site = 0;              // 1-based probe site; 0 for aggregate observables
  std::string meta_json;     // serialized metadata (model, L, impurity, samples, seed)

  std::size_t size() const { return times.size(); }
  void validate() const;     // shape invariants
};

/// Writes `t,value,stderr` rows. Deterministic formatting (%.17g).
void write_csv(const CorrelationSeries& s, const std::string& path);
CorrelationSeries read_csv(const std::string& path);

/// Series + metadata in one JSON document.
void write_json(const CorrelationSeries& s, const std::string& path);

std::vector<double> log_time_grid(double t_min, double t_max, int per_decade);
/// Strictly increasing integer times covering [1, t_max] log-uniformly.
std::vector<double> integer_time_grid(double t_max, int per_decade);

std::string format_double(double v);

}  // namespace slowmode
