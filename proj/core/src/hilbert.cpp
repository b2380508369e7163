#include "koszul/hilbert.hpp"

#include "koszul/errors.hpp"

namespace koszul {

AlgebraNumerics make_algebra(IntPolynomial h, int dim, int embdim,
                             std::optional<bool> ci, std::string label) {
  if (h.at(0) != 1) throw usage_error("h-polynomial must have constant term 1");
  if (dim < 0 || embdim < dim)
    throw usage_error("need 0 <= dim <= embdim for " + label);
  AlgebraNumerics a;
  a.h_poly = std::move(h);
  a.dim = dim;
  a.embdim = embdim;
  a.codim = embdim - dim;
  a.multiplicity = eval_int(a.h_poly, 1);
  a.label = std::move(label);
  if (ci.has_value()) {
    a.is_complete_intersection = ci;
  } else if (a.codim == 0) {
    a.is_complete_intersection = true;  // polynomial ring
  } else if (a.multiplicity < int_pow(2, static_cast<unsigned long>(a.codim))) {
    a.is_complete_intersection = false;
  }
  return a;
}

// HF(i) = binom(n-1+ic, n-1), the dimension of the degree-ic slice of a
// polynomial ring in n variables.
static Int veronese_hf(int n, int c, int i) {
  return binomial(static_cast<long>(n) - 1 + static_cast<long>(i) * c, n - 1);
}

AlgebraNumerics veronese_numerics(int n, int c) {
  if (n < 1 || c < 1) throw usage_error("veronese parameters must be >= 1");
  // h_i = sum_j (-1)^(i-j) binom(n, i-j) HF(j); the numerator has degree < n.
  std::vector<Int> h(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j <= i; ++j) {
      Int term = binomial(n, i - j) * veronese_hf(n, c, j);
      if ((i - j) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h[i] = acc;
  }
  IntPolynomial hp{std::vector<Int>(h)};

  // Independent route: (1-z)^n * sum HF(i) z^i must reproduce h exactly and
  // vanish beyond its degree.
  {
    int window = n + 5;
    std::vector<Int> hf(static_cast<size_t>(window) + 1);
    for (int i = 0; i <= window; ++i) hf[i] = veronese_hf(n, c, i);
    for (int k = 0; k <= window; ++k) {
      Int acc = 0;
      for (int j = 0; j <= k && j <= n; ++j) {
        Int term = binomial(n, j) * hf[k - j];
        if (j % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      if (acc != hp.at(k))
        throw internal_error("veronese h-polynomial mismatch at coefficient " +
                             std::to_string(k));
    }
  }

  long embdim_l = mpz_get_si(binomial(static_cast<long>(n) + c - 1, c).get_mpz_t());
  AlgebraNumerics a = make_algebra(hp, n, static_cast<int>(embdim_l), std::nullopt,
                                   "veronese(" + std::to_string(n) + "," +
                                       std::to_string(c) + ")");
  if (a.multiplicity != int_pow(c, static_cast<unsigned long>(n) - 1))
    throw internal_error("veronese multiplicity differs from c^(n-1)");
  return a;
}

AlgebraNumerics segre_numerics(int m, int n) {
  if (m < 1 || n < m)
    throw usage_error("segre parameters must satisfy 1 <= m <= n");
  // h_i = binom(m-1, i) binom(n-1, i).
  std::vector<Int> h(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) h[i] = binomial(m - 1, i) * binomial(n - 1, i);
  IntPolynomial hp{std::vector<Int>(h)};

  // Independent route: HF(i) = binom(m-1+i, m-1) binom(n-1+i, n-1) against the
  // expansion of h/(1-z)^(m+n-1).
  {
    int window = m + n + 4;
    TruncatedSeries s = expand_rational_series(hp, m + n - 1, window);
    for (int i = 0; i <= window; ++i) {
      Int hf = binomial(m - 1 + i, m - 1) * binomial(n - 1 + i, n - 1);
      if (s.at(i) != hf)
        throw internal_error("segre Hilbert function mismatch at degree " +
                             std::to_string(i));
    }
  }

  AlgebraNumerics a =
      make_algebra(hp, m + n - 1, m * n, std::nullopt,
                   "segre(" + std::to_string(m) + "," + std::to_string(n) + ")");
  if (a.multiplicity != binomial(m + n - 2, m - 1))
    throw internal_error("segre multiplicity differs from binom(m+n-2, m-1)");
  return a;
}

Int hilbert_function_value(const AlgebraNumerics& a, int i) {
  if (i < 0) return 0;
  TruncatedSeries s = expand_rational_series(a.h_poly, a.dim, i);
  return s.at(i);
}

AlgebraNumerics tensor_numerics(const AlgebraNumerics& a,
                                const AlgebraNumerics& b) {
  std::optional<bool> ci;
  if (a.is_complete_intersection.has_value() &&
      b.is_complete_intersection.has_value())
    ci = *a.is_complete_intersection && *b.is_complete_intersection;
  return make_algebra(a.h_poly * b.h_poly, a.dim + b.dim, a.embdim + b.embdim,
                      ci, a.label + " (x) " + b.label);
}

}  // namespace koszul
