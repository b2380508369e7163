#pragma once

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "koszul/groebner.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

// Graded quotient of a polynomial ring, backed by a (possibly truncated)
// Groebner basis. Degree slices use standard monomials as bases; monomial
// normal forms and multiplication-by-variable maps are cached.
class QuotientRing {
 public:
  QuotientRing(std::vector<std::string> vars,
               std::vector<MultiPolynomial> ideal_gens,
               const MonomialOrder& order, const Field& field, int cap);

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const Field& field() const { return basis_.field; }
  const GroebnerBasis& basis() const { return basis_; }
  // Largest degree whose slice data is certified.
  int certified_degree() const { return certified_; }

  const std::vector<Monomial>& monomials(int degree) const;
  size_t dim(int degree) const { return monomials(degree).size(); }
  size_t index(int degree, const Monomial& m) const;

  // Normal form of an arbitrary polynomial, with per-monomial memoization.
  MultiPolynomial reduce(const MultiPolynomial& f) const;

  // Coefficient vector of a homogeneous element in the slice basis.
  Vec coordinates(const MultiPolynomial& f, int degree) const;
  MultiPolynomial from_coordinates(const Vec& v, int degree) const;

  // Slice of multiplication by the v-th variable, R_d -> R_{d+1}; columns
  // indexed by the degree-d basis.
  const Matrix& variable_map(size_t v, int degree) const;

 private:
  void ensure_certified(int degree) const;

  std::vector<std::string> vars_;
  GroebnerBasis basis_;
  int certified_;
  mutable std::map<int, std::vector<Monomial>> slices_;
  mutable std::map<int, std::map<Monomial, size_t>> indices_;
  mutable std::map<Monomial, MultiPolynomial> monomial_nf_;
  mutable std::map<std::pair<size_t, int>, Matrix> var_maps_;
};

// Convenience: the polynomial ring itself.
std::shared_ptr<QuotientRing> polynomial_ring(std::vector<std::string> vars,
                                              const Field& field, int cap);

}  // namespace koszul
