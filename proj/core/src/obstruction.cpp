#include "koszul/obstruction.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

// The coefficients of 1 - h(-z)/(1-z)^c agree, for k > deg h, with an exact
// polynomial T(k) of degree c - a - 1 (a = vanish order of h at -1) whose
// leading coefficient is -g(-1)/(c-a-1)!. Returns T's coefficients over Q,
// lowest first.
static std::vector<Rat> tail_polynomial(const IntPolynomial& h, int c) {
  // T(k) = -sum_j h_j (-1)^j binom(c-1+k-j, c-1)
  //      = -sum_j h_j (-1)^j prod_{t=1}^{c-1} (k-j+t) / (c-1)!
  std::vector<Rat> total{Rat(0)};
  for (int j = 0; j <= h.degree(); ++j) {
    if (h.at(j) == 0) continue;
    std::vector<Rat> prod{Rat(1)};
    for (int t = 1; t <= c - 1; ++t) {
      // multiply by (k + (t - j))
      std::vector<Rat> next(prod.size() + 1);
      Rat shift(static_cast<long>(t) - j);
      for (size_t d = 0; d < prod.size(); ++d) {
        next[d] += prod[d] * shift;
        next[d + 1] += prod[d];
      }
      prod = std::move(next);
    }
    Rat scale(h.at(j));
    if (j % 2 != 0) scale = -scale;
    if (total.size() < prod.size()) total.resize(prod.size());
    for (size_t d = 0; d < prod.size(); ++d) total[d] -= scale * prod[d];
  }
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(c - 1));
  for (Rat& t : total) t /= Rat(fact);
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

// All real roots of T lie below 1 + max |t_i / t_d| (Cauchy), so beyond that
// index the tail keeps the sign of its leading coefficient.
static long cauchy_root_bound(const std::vector<Rat>& t) {
  size_t d = t.size() - 1;
  Rat maxratio(0);
  for (size_t i = 0; i < d; ++i) {
    Rat r = abs(t[i] / t[d]);
    if (r > maxratio) maxratio = r;
  }
  Int bound = maxratio.get_num() / maxratio.get_den() + 2;
  if (!bound.fits_slong_p()) return -1;
  return mpz_get_si(bound.get_mpz_t());
}

ObstructionReport br_obstruction(const AlgebraNumerics& a, int order) {
  if (a.codim == 0)
    throw usage_error("obstruction series needs codimension >= 1 (" + a.label +
                      ")");
  if (order < 2) throw usage_error("scan order must be >= 2");

  ObstructionReport rep;
  rep.label = a.label;
  rep.codim_used = a.codim;
  rep.scan_order = order;

  TruncatedSeries u =
      expand_rational_series(a.h_poly.negate_variable(), a.codim, order);
  rep.passed = true;
  for (int k = 0; k <= order; ++k) {
    Int s = (k == 0 ? Int(1) - u.at(0) : Int(-u.at(k)));
    if (s < 0) {
      rep.passed = false;
      rep.fail_index = k;
      rep.fail_coefficient = s;
      break;
    }
  }

  NegOneFactorization f = factor_out_neg_one(a.h_poly);
  rep.vanish_order = f.order;
  rep.g_at_minus_one = eval_int(f.cofactor, Int(-1));

  if (f.order >= a.codim) {
    // 1 - g(-z)(1-z)^(a-c) is a polynomial; the tail is identically zero.
    rep.asymptotic = Asymptotic::EventuallyNonnegative;
    if (rep.passed && order > f.cofactor.degree() + (f.order - a.codim))
      rep.tail_verified = true;
  } else if (rep.g_at_minus_one > 0) {
    rep.asymptotic = Asymptotic::EventuallyNegative;
  } else {
    rep.asymptotic = Asymptotic::EventuallyNonnegative;
    // Certify the pass against the exact tail polynomial when it is small
    // enough to build.
    if (rep.passed && a.codim <= 256) {
      std::vector<Rat> t = tail_polynomial(a.h_poly, a.codim);
      long bound = cauchy_root_bound(t);
      if (bound >= 0 && t.back() > 0 &&
          order >= std::max<long>(a.h_poly.degree() + 1, bound))
        rep.tail_verified = true;
    }
  }

  rep.multiplicity_bound_ok = ci_multiplicity_check(a);
  return rep;
}

bool ci_multiplicity_check(const AlgebraNumerics& a) {
  Int bound = int_pow(2, static_cast<unsigned long>(a.codim));
  if (a.is_complete_intersection.has_value() && !*a.is_complete_intersection)
    return a.multiplicity < bound;
  return a.multiplicity <= bound;
}

std::vector<ObstructionReport> family_scan(const FamilyScan& spec, int order) {
  if (spec.first_lo > spec.first_hi || spec.second_lo > spec.second_hi)
    throw usage_error("empty scan range");
  std::vector<ObstructionReport> out;
  for (int p = spec.first_lo; p <= spec.first_hi; ++p)
    for (int q = spec.second_lo; q <= spec.second_hi; ++q) {
      if (spec.kind == FamilyScan::Kind::Segre && p > q) continue;
      AlgebraNumerics a = spec.kind == FamilyScan::Kind::Veronese
                              ? veronese_numerics(p, q)
                              : segre_numerics(p, q);
      out.push_back(br_obstruction(a, order));
    }
  return out;
}

}  // namespace koszul
