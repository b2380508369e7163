#pragma once

#include <string>
#include <vector>

#include "koszul/multipoly.hpp"

namespace koszul {

// Parsed form of the input language:
//   ring x1, x2, x3;
//   ideal x1^2, x1*x2 - 2*x3^2;
//   module gens 0, 1;
//   rel x1, x2^2;
// The ring stanza is mandatory and comes first; ideal and module blocks are
// optional; each rel stanza is one relation column over the module
// generators.
struct ParsedInput {
  std::vector<std::string> vars;
  bool has_ideal = false;
  std::vector<MultiPolynomial> ideal_gens;
  bool has_module = false;
  std::vector<int> module_gen_degrees;
  std::vector<std::vector<MultiPolynomial>> module_relations;

  bool operator==(const ParsedInput& o) const;
};

// Throws parse errors carrying line and column; rejects unknown variables
// and non-homogeneous ideal or relation entries.
ParsedInput parse_input(const std::string& text);

// Canonical rendering; parse_input(print_input(p)) == p.
std::string print_input(const ParsedInput& in);

}  // namespace koszul
