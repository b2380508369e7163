#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/multipoly.hpp"

namespace koszul {

struct GroebnerBasis {
  std::vector<std::string> vars;
  std::vector<MultiPolynomial> elements;  // monic, inter-reduced
  MonomialOrder order;
  Field field;
  int degree_cap = 0;
  bool complete = true;  // false if any S-pair exceeded the cap
};

// Division remainder: no term divisible by any leading term of the divisors.
MultiPolynomial normal_form(const MultiPolynomial& f,
                            const std::vector<MultiPolynomial>& divisors,
                            const MonomialOrder& ord, const Field& field);

// Degree-capped Buchberger with the coprime-leading-term skip; S-pairs in
// lowest-lcm-degree-first order, ties by generator index. Output is monic
// and inter-reduced.
GroebnerBasis buchberger(const std::vector<std::string>& vars,
                         const std::vector<MultiPolynomial>& gens,
                         const MonomialOrder& ord, const Field& field,
                         int degree_cap);

struct GroebnerCheck {
  bool passed = true;
  // When failed: the offending pair and the irreducible remainder.
  size_t pair_i = 0, pair_j = 0;
  MultiPolynomial remainder;
};

// Checks whether every S-polynomial within the cap reduces to zero against
// the given set (which is not extended).
GroebnerCheck is_groebner(const std::vector<MultiPolynomial>& gens,
                          const MonomialOrder& ord, const Field& field,
                          int degree_cap);

// Degree-d monomials outside the initial ideal, listed in the basis order.
// Refuses when the truncated basis cannot certify the answer.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int d);

}  // namespace koszul
