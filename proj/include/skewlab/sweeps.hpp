#pragma once

#include <string>
#include <vector>

#include "skewlab/enumerate.hpp"

namespace skewlab {

struct SweepResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, bounds, or the first failure witness
};

// Named verification suites over the small-order catalog and the symbolic
// families. Suite names:
//   axioms, orbit-stabilizer, index, sli, dietzmann, bounds, b2,
//   solutions, decomposition, families, enumeration, generic-forms
std::vector<std::string> sweep_names();
SweepResult run_sweep(const std::string& name);
std::vector<SweepResult> run_all_sweeps();

// Shared catalog for the sweeps (orders 1..8), built once per process.
const std::vector<BraceCatalogEntry>& sweep_catalog();

}  // namespace skewlab
