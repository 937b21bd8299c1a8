#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "slowmode/gateset.hpp"

namespace slowmode {

struct KrylovReport {
  long subspace_count = 0;
  std::map<long, long> size_histogram;  // component size -> how many components
};

/// Connected components of the configuration graph whose edges are all
/// transitions of all rules (bulk layers and impurity).
KrylovReport enumerate_krylov(const GateSet& gs, long cap = 531441);

}  // namespace slowmode
