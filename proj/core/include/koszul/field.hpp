#pragma once

#include "koszul/errors.hpp"
#include "koszul/numbers.hpp"

namespace koszul {

// Coefficient field: exact rationals when p == 0, otherwise the prime field
// F_p with elements stored as integers in [0, p).
struct Field {
  long p = 0;

  bool modular() const { return p != 0; }

  Rat canon(const Rat& x) const {
    if (!modular()) {
      Rat y = x;
      y.canonicalize();
      return y;
    }
    Int den = x.get_den();
    Int num = x.get_num();
    Int pz(p);
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw usage_error("denominator not invertible modulo " +
                        std::to_string(p));
    Int r = (num % pz) * den_inv % pz;
    if (r < 0) r += pz;
    return Rat(r);
  }

  Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }

  Rat inv(const Rat& x) const {
    if (x == 0) throw internal_error("division by zero in the field");
    if (!modular()) return Rat(1) / x;
    Int pz(p);
    Int v = x.get_num() % pz;
    if (v < 0) v += pz;
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw usage_error("element not invertible modulo " + std::to_string(p));
    return Rat(r);
  }

  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rat& x) const { return canon(x) == 0; }
};

}  // namespace koszul
