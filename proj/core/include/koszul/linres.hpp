#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

// Graph on the ambient variables with an edge {u,v} exactly when the
// squarefree quadratic ideal misses the product uv.
VarGraph nonedge_graph(const MonomialIdeal& ideal);

struct TwoLinearResult {
  bool passed = false;
  MonomialIdeal polarized;
  ChordalityResult chordality;
  std::vector<std::string> elimination_names;  // when chordal
  std::vector<std::string> cycle_names;        // when not
};

// Quadratic monomial ideal has a linear resolution iff the non-edge graph of
// its polarization is chordal.
TwoLinearResult has_two_linear_resolution(const MonomialIdeal& ideal);

// An ordering of the generators such that each initial colon ideal is
// generated by variables; found by depth-first search over prefixes.
std::optional<std::vector<size_t>> linear_quotients_order(
    const MonomialIdeal& ideal);

struct BRCertificate {
  MonomialIdeal ci_part;      // pairwise coprime generators
  MonomialIdeal linear_part;  // passes has_two_linear_resolution
  TwoLinearResult evidence;
  std::optional<std::vector<size_t>> linear_quotients;  // ordering of linear_part
};

// Splits the minimal generators into a regular sequence U and a remainder V
// with a linear resolution. Generators coprime to every other generator are
// committed to U up front; if the remainder fails the linearity test, the
// search widens to all pairwise-coprime subsets, largest first, ties broken
// by generator positions.
std::optional<BRCertificate> ci_plus_two_linear(const MonomialIdeal& ideal,
                                                size_t generator_cap = 24);

// Checks the certificate invariants against the ideal it was issued for.
bool validate_certificate(const MonomialIdeal& ideal, const BRCertificate& c);

}  // namespace koszul
