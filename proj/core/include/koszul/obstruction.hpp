#pragma once

#include <vector>

#include "koszul/hilbert.hpp"

namespace koszul {

enum class Asymptotic { EventuallyNegative, EventuallyNonnegative, Inconclusive };

// Outcome of scanning the series 1 - h(-z)/(1-z)^codim for a negative
// coefficient. A negative coefficient certifies that no surjective Golod map
// from a complete intersection onto the algebra exists; an all-nonnegative
// prefix is only a pass up to the scanned order.
struct ObstructionReport {
  std::string label;
  int codim_used = 0;
  int scan_order = 0;

  bool passed = false;      // no negative coefficient up to scan_order
  int fail_index = -1;      // first k with a negative coefficient, if any
  Int fail_coefficient;     // its value

  int vanish_order = 0;     // multiplicity of -1 as a root of h
  Int g_at_minus_one;       // h = (1+z)^vanish_order * g, g(-1)
  Asymptotic asymptotic = Asymptotic::Inconclusive;
  bool multiplicity_bound_ok = false;
  // True when the scanned prefix passed and the polynomial tail of the series
  // is provably nonnegative beyond it, so the pass covers every coefficient.
  bool tail_verified = false;
};

ObstructionReport br_obstruction(const AlgebraNumerics& a, int order);

// Multiplicity test against a complete intersection of the same codimension:
// e <= 2^codim when the flag is true or unknown, strict when known false.
bool ci_multiplicity_check(const AlgebraNumerics& a);

struct FamilyScan {
  enum class Kind { Veronese, Segre } kind = Kind::Veronese;
  // Veronese: first = n range, second = c range.
  // Segre: first = m range, second = n range (tuples with m > n are skipped).
  int first_lo = 2, first_hi = 2;
  int second_lo = 2, second_hi = 2;
};

// One report per parameter tuple, lexicographic order.
std::vector<ObstructionReport> family_scan(const FamilyScan& spec, int order);

}  // namespace koszul
