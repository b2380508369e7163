#pragma once

#include <optional>
#include <string>

#include "koszul/intpoly.hpp"

namespace koszul {

// Numerical fingerprint of a standard graded algebra: the numerator h of its
// Hilbert series h(z)/(1-z)^dim together with the basic size invariants.
struct AlgebraNumerics {
  IntPolynomial h_poly;
  int dim = 0;
  int embdim = 0;
  int codim = 0;      // embdim - dim
  Int multiplicity;   // h(1)
  std::optional<bool> is_complete_intersection;
  std::string label;
};

// Validates h(0) = 1 and dim <= embdim, fills codim and multiplicity, and
// settles the complete-intersection flag where it is forced: codim 0 means a
// polynomial ring (true), and multiplicity below 2^codim rules a complete
// intersection out (its defining forms have degree >= 2, so e >= 2^codim).
AlgebraNumerics make_algebra(IntPolynomial h, int dim, int embdim,
                             std::optional<bool> ci, std::string label);

// c-th Veronese of a polynomial ring in n variables.
AlgebraNumerics veronese_numerics(int n, int c);

// Segre product of polynomial rings in m and n variables, m <= n.
AlgebraNumerics segre_numerics(int m, int n);

// Coefficient of z^i in h(z)/(1-z)^dim.
Int hilbert_function_value(const AlgebraNumerics& a, int i);

// Segre-style tensor combination: h-polynomials multiply, dimensions and
// embedding dimensions add.
AlgebraNumerics tensor_numerics(const AlgebraNumerics& a,
                                const AlgebraNumerics& b);

}  // namespace koszul
