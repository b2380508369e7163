#pragma once

#include <string>
#include <vector>

namespace koszul {

// One row of the reproduction battery: a fact recomputed from scratch and
// compared against its frozen expected value.
struct CheckRow {
  int group = 0;  // reporting group used by the acceptance harness
  std::string name;
  bool passed = false;
  std::string detail;  // filled on failure
};

// Deterministic battery: closed-form Hilbert data, obstruction series,
// monomial certificates, Groebner verification, resolution cells, Golod and
// Serre comparisons, linearity defects. Groups 1 through 9.
std::vector<CheckRow> golden_battery();

// Randomized cross-check battery (group 10): colon ideals against
// brute-force membership, chordality against induced-cycle enumeration,
// differential and minimality validation of computed resolutions, Euler
// characteristic against the module Hilbert function.
std::vector<CheckRow> property_battery(unsigned seed);

}  // namespace koszul
