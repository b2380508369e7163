#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "koszul/numbers.hpp"

namespace koszul {

// Dense univariate polynomial over the integers. Coefficient i is the
// coefficient of z^i; trailing zeros are trimmed, the zero polynomial has an
// empty coefficient vector.
struct IntPolynomial {
  std::vector<Int> coeff;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> cs);
  explicit IntPolynomial(std::vector<Int> cs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }

  void normalize();  // trim trailing zeros
  bool is_zero() const { return coeff.empty(); }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  Int at(int i) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return coeff == o.coeff; }

  // p(-z)
  IntPolynomial negate_variable() const;

  std::string str(const std::string& var = "z") const;
};

// Prefix of a power series: coefficients 0..order.
struct TruncatedSeries {
  std::vector<Int> coeff;
  int order() const { return static_cast<int>(coeff.size()) - 1; }
  Int at(int i) const;
};

// Coefficients 0..order of numerator(z) / (1-z)^denom_exponent.
TruncatedSeries expand_rational_series(const IntPolynomial& numerator,
                                       int denom_exponent, int order);

// p = (1+z)^order * cofactor with cofactor(-1) != 0. Throws on p = 0.
struct NegOneFactorization {
  int order = 0;
  IntPolynomial cofactor;
};
NegOneFactorization factor_out_neg_one(const IntPolynomial& p);

Int eval_int(const IntPolynomial& p, const Int& x);

}  // namespace koszul
