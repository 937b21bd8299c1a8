#include "slowmode/series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slowmode/errors.hpp"

namespace slowmode {

void CorrelationSeries::validate() const {
  if (values.size() != times.size() || std_errors.size() != times.size())
    throw ValidationError("series arrays must have equal length");
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1]))
      throw ValidationError("series times must be strictly increasing");
  for (double e : std_errors)
    if (e < 0) throw ValidationError("negative standard error");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const CorrelationSeries& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  out << "t,value,stderr\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << format_double(s.times[i]) << ',' << format_double(s.values[i]) << ','
        << format_double(s.std_errors[i]) << '\n';
}

CorrelationSeries read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  CorrelationSeries s;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double v[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, cell, ',')) throw ValidationError("bad csv row: " + line);
      v[i] = std::stod(cell);
    }
    s.times.push_back(v[0]);
    s.values.push_back(v[1]);
    s.std_errors.push_back(v[2]);
  }
  s.validate();
  return s;
}

void write_json(const CorrelationSeries& s, const std::string& path) {
  nlohmann::json j;
  j["site"] = s.site;
  j["meta"] = s.meta_json.empty() ? nlohmann::json::object()
                                  : nlohmann::json::parse(s.meta_json);
  j["times"] = s.times;
  j["values"] = s.values;
  j["std_errors"] = s.std_errors;
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  out << j.dump(2) << '\n';
}

std::vector<double> log_time_grid(double t_min, double t_max, int per_decade) {
  if (!(t_min > 0) || !(t_max > t_min) || per_decade < 1)
    throw ValidationError("bad log grid spec");
  std::vector<double> t;
  const double step = std::pow(10.0, 1.0 / per_decade);
  for (double v = t_min; v <= t_max * (1 + 1e-12); v *= step) t.push_back(v);
  return t;
}

std::vector<double> integer_time_grid(double t_max, int per_decade) {
  std::vector<double> t;
  long prev = 0;
  for (double v : log_time_grid(1.0, t_max, per_decade)) {
    long iv = std::lround(v);
    if (iv > prev) {
      t.push_back(static_cast<double>(iv));
      prev = iv;
    }
  }
  return t;
}

}  // namespace slowmode
