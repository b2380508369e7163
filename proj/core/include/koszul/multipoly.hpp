#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

// Degree-reverse-lexicographic order with an explicit variable priority.
// priority[k] is the ambient index of the k-th smallest variable.
struct MonomialOrder {
  std::vector<size_t> priority;

  static MonomialOrder standard(size_t nvars);  // priority = ambient order
  // Two monomials of equal degree compare by the sign of the difference at
  // the smallest-priority variable where they differ.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

// Sparse polynomial: terms sorted by the ambient-standard order, no zero
// coefficients. The term order used for leading terms is passed explicitly.
struct MultiPolynomial {
  std::vector<std::pair<Monomial, Rat>> terms;

  static MultiPolynomial zero() { return {}; }
  static MultiPolynomial from_terms(
      std::vector<std::pair<Monomial, Rat>> terms, const Field& f);

  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous() const;
  int degree() const;  // max term degree, -1 for zero

  MultiPolynomial plus(const MultiPolynomial& o, const Field& f) const;
  MultiPolynomial minus(const MultiPolynomial& o, const Field& f) const;
  MultiPolynomial scaled(const Rat& c, const Field& f) const;
  MultiPolynomial times_monomial(const Monomial& m, const Field& f) const;
  MultiPolynomial times(const MultiPolynomial& o, const Field& f) const;

  const std::pair<Monomial, Rat>& leading_term(const MonomialOrder& ord) const;
  // Scales so the leading coefficient is 1.
  MultiPolynomial monic(const MonomialOrder& ord, const Field& f) const;

  bool equals(const MultiPolynomial& o) const;
  std::string str(const std::vector<std::string>& vars) const;
};

MultiPolynomial make_monomial_poly(const Monomial& m, const Rat& c);

}  // namespace koszul
