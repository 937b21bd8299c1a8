#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slowmode {

struct CriterionReport {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;  // per-clause results, one line each
  double seconds = 0;
};

/// Runs one acceptance criterion (1..13). Tolerances and thresholds are fixed
/// in code; each clause reports pass/fail plus the measured numbers.
CriterionReport run_criterion(int id);

/// Runs all criteria in order, streaming one line per criterion to
/// `progress` when given.
std::vector<CriterionReport> run_all_criteria(std::ostream* progress);

}  // namespace slowmode
