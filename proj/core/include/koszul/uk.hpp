#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/monomial.hpp"

namespace koszul {

// Derivation tree showing how a quadratic monomial ring is assembled from
// the base rings k[x_1..x_m]/((x_1..x_{m-1})^2 + (x_m^2)) by polynomial
// extension, square-zero extension, and fibre products.
struct UKNode {
  enum class Kind { BaseH, PolyExt, SquareZeroExt, FibreProduct };
  Kind kind = Kind::BaseH;
  std::vector<std::string> vars;  // ambient of the ideal this node produces
  std::string variable;  // peeled variable, or the lone squared one for BaseH
  std::vector<UKNode> children;
  int base_m = 0;  // BaseH only

  std::string str() const;
};

// Rebuilds the monomial ideal the derivation describes.
MonomialIdeal replay_derivation(const UKNode& node);

// Attempts the recursive recognition. Rules, tried in this order at every
// level: exact base-ring pattern; peel a variable absent from all
// generators; peel a variable whose square is a generator and which appears
// nowhere else; split along connected components of the graph joining u~v
// whenever uv is not in the ideal. The result is replayed against the input
// before being returned.
std::optional<UKNode> uk_recognize(const MonomialIdeal& ideal);

}  // namespace koszul
