#pragma once

#include <optional>
#include <string>
#include <vector>

namespace koszul {

// Exponent vector over a fixed ambient variable list.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(size_t nvars) : exp(nvars, 0) {}

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial divide(const Monomial& m) const;  // caller guarantees divisibility
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const { return gcd(*this, m).is_one(); }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  // Canonical container order: degree, then lexicographic on exponents.
  bool operator<(const Monomial& o) const;
};

// Monomial ideal kept by its minimal generators in first-appearance order.
struct MonomialIdeal {
  std::vector<std::string> vars;
  std::vector<Monomial> gens;

  static MonomialIdeal make(std::vector<std::string> vars,
                            std::vector<Monomial> gens);

  bool is_quadratic() const;   // every generator has degree exactly 2
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;  // divisibility by some generator
  bool same_ideal_as(const MonomialIdeal& o) const;
  std::string gen_str(size_t i) const;
  std::string str() const;
};

// Keeps the divisibility-minimal elements, first occurrence first.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

// (gens) : a, via the quotient rule gen/gcd(gen, a), minimalized.
std::vector<Monomial> monomial_colon(const std::vector<Monomial>& gens,
                                     const Monomial& a);

// Monomials form a regular sequence exactly when they are pairwise coprime.
bool is_monomial_regular_sequence(const std::vector<Monomial>& gens);

// Squarefree quadratic ideal on a doubled variable set with the same graded
// Betti numbers: x^2 becomes x*x', a mixed product stays itself. Input must
// be quadratic.
MonomialIdeal polarize(const MonomialIdeal& ideal);

// Disjoint-variable fibre product: union of the generators plus all products
// of one variable from each side.
MonomialIdeal fibre_product(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace koszul
