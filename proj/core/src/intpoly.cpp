#include "koszul/intpoly.hpp"

#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> cs) {
  coeff.reserve(cs.size());
  for (long c : cs) coeff.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<Int> cs) : coeff(std::move(cs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

Int IntPolynomial::at(int i) const {
  if (i < 0 || i >= static_cast<int>(coeff.size())) return 0;
  return coeff[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(coeff.size(), o.coeff.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < coeff.size()) r[i] += coeff[i];
    if (i < o.coeff.size()) r[i] += o.coeff[i];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(coeff.size(), o.coeff.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < coeff.size()) r[i] += coeff[i];
    if (i < o.coeff.size()) r[i] -= o.coeff[i];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> r(coeff.size() + o.coeff.size() - 1);
  for (size_t i = 0; i < coeff.size(); ++i)
    for (size_t j = 0; j < o.coeff.size(); ++j) r[i + j] += coeff[i] * o.coeff[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::negate_variable() const {
  std::vector<Int> r = coeff;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    Int a = coeff[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

Int TruncatedSeries::at(int i) const {
  if (i < 0 || i >= static_cast<int>(coeff.size())) return 0;
  return coeff[i];
}

TruncatedSeries expand_rational_series(const IntPolynomial& numerator,
                                       int denom_exponent, int order) {
  if (denom_exponent < 0) throw usage_error("denominator exponent must be >= 0");
  if (order < 0) throw usage_error("series order must be >= 0");
  std::vector<Int> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order && i < static_cast<int>(numerator.coeff.size()); ++i)
    c[i] = numerator.coeff[i];
  // Multiplying by 1/(1-z) is a running sum; apply it denom_exponent times.
  for (int pass = 0; pass < denom_exponent; ++pass)
    for (int i = 1; i <= order; ++i) c[i] += c[i - 1];
  TruncatedSeries s;
  s.coeff = std::move(c);
  return s;
}

NegOneFactorization factor_out_neg_one(const IntPolynomial& p) {
  if (p.is_zero()) throw usage_error("cannot factor the zero polynomial");
  NegOneFactorization f;
  f.cofactor = p;
  // Synthetic division by (z + 1) while -1 stays a root.
  while (eval_int(f.cofactor, Int(-1)) == 0) {
    const std::vector<Int>& c = f.cofactor.coeff;
    std::vector<Int> q(c.size() - 1);
    Int carry = 0;  // builds the quotient from the top coefficient down
    for (size_t i = c.size(); i-- > 1;) {
      carry = c[i] - carry;
      q[i - 1] = carry;
    }
    f.cofactor = IntPolynomial(std::move(q));
    ++f.order;
  }
  return f;
}

Int eval_int(const IntPolynomial& p, const Int& x) {
  Int acc = 0;
  for (size_t i = p.coeff.size(); i-- > 0;) acc = acc * x + p.coeff[i];
  return acc;
}

}  // namespace koszul
