#include "koszul/groebner.hpp"

#include <algorithm>
#include <deque>

#include "koszul/errors.hpp"

namespace koszul {

MultiPolynomial normal_form(const MultiPolynomial& f,
                            const std::vector<MultiPolynomial>& divisors,
                            const MonomialOrder& ord, const Field& field) {
  MultiPolynomial work = f, rem;
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(ord);
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      const auto& [gm, gc] = g.leading_term(ord);
      if (!gm.divides(lm)) continue;
      Rat factor = field.div(lc, gc);
      work = work.minus(
          g.times_monomial(lm.divide(gm), field).scaled(factor, field), field);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem.plus(make_monomial_poly(lm, lc), field);
      work = work.minus(make_monomial_poly(lm, lc), field);
    }
  }
  return rem;
}

namespace {

struct Pair {
  size_t i, j;
  int lcm_degree;
};

std::vector<MultiPolynomial> inter_reduce(std::vector<MultiPolynomial> elems,
                                          const MonomialOrder& ord,
                                          const Field& field) {
  // Keep only elements whose leading term is not divisible by another's.
  std::sort(elems.begin(), elems.end(),
            [&](const MultiPolynomial& a, const MultiPolynomial& b) {
              return ord.less(a.leading_term(ord).first,
                              b.leading_term(ord).first);
            });
  std::vector<MultiPolynomial> kept;
  for (const auto& e : elems) {
    const Monomial& lm = e.leading_term(ord).first;
    bool redundant = false;
    for (const auto& k : kept)
      if (k.leading_term(ord).first.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(e);
  }
  // Tail-reduce every element against the rest until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<MultiPolynomial> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      MultiPolynomial r =
          normal_form(kept[i], others, ord, field).monic(ord, field);
      if (!r.equals(kept[i])) {
        kept[i] = r;
        changed = true;
      }
    }
  }
  return kept;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<std::string>& vars,
                         const std::vector<MultiPolynomial>& gens,
                         const MonomialOrder& ord, const Field& field,
                         int degree_cap) {
  GroebnerBasis basis;
  basis.vars = vars;
  basis.order = ord;
  basis.field = field;
  basis.degree_cap = degree_cap;

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.degree() > degree_cap)
      throw bound_error("degree cap " + std::to_string(degree_cap) +
                        " is below a generator of degree " +
                        std::to_string(g.degree()));
    basis.elements.push_back(g.monic(ord, field));
  }

  std::deque<Pair> queue;
  auto push_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      const Monomial lcm =
          Monomial::lcm(basis.elements[i].leading_term(ord).first,
                        basis.elements[k].leading_term(ord).first);
      queue.push_back({i, k, lcm.degree()});
    }
  };
  for (size_t k = 1; k < basis.elements.size(); ++k) push_pairs_with(k);

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(),
                                 [](const Pair& a, const Pair& b) {
                                   if (a.lcm_degree != b.lcm_degree)
                                     return a.lcm_degree < b.lcm_degree;
                                   if (a.i != b.i) return a.i < b.i;
                                   return a.j < b.j;
                                 });
    Pair p = *best;
    queue.erase(best);

    const auto& gi = basis.elements[p.i];
    const auto& gj = basis.elements[p.j];
    const Monomial& mi = gi.leading_term(ord).first;
    const Monomial& mj = gj.leading_term(ord).first;
    if (mi.coprime(mj)) continue;  // S-polynomial reduces to zero
    if (p.lcm_degree > degree_cap) {
      basis.complete = false;
      continue;
    }
    Monomial lcm = Monomial::lcm(mi, mj);
    MultiPolynomial s = gi.times_monomial(lcm.divide(mi), field)
                            .minus(gj.times_monomial(lcm.divide(mj), field),
                                   field);
    MultiPolynomial r = normal_form(s, basis.elements, ord, field);
    if (r.is_zero()) continue;
    basis.elements.push_back(r.monic(ord, field));
    push_pairs_with(basis.elements.size() - 1);
  }

  basis.elements = inter_reduce(std::move(basis.elements), ord, field);
  return basis;
}

GroebnerCheck is_groebner(const std::vector<MultiPolynomial>& gens,
                          const MonomialOrder& ord, const Field& field,
                          int degree_cap) {
  GroebnerCheck res;
  std::vector<MultiPolynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  for (size_t i = 0; i < nonzero.size(); ++i)
    for (size_t j = i + 1; j < nonzero.size(); ++j) {
      const Monomial& mi = nonzero[i].leading_term(ord).first;
      const Monomial& mj = nonzero[j].leading_term(ord).first;
      if (mi.coprime(mj)) continue;
      Monomial lcm = Monomial::lcm(mi, mj);
      if (lcm.degree() > degree_cap) continue;
      const Rat& ci = nonzero[i].leading_term(ord).second;
      const Rat& cj = nonzero[j].leading_term(ord).second;
      MultiPolynomial s =
          nonzero[i]
              .times_monomial(lcm.divide(mi), field)
              .scaled(field.inv(ci), field)
              .minus(nonzero[j]
                         .times_monomial(lcm.divide(mj), field)
                         .scaled(field.inv(cj), field),
                     field);
      MultiPolynomial r = normal_form(s, nonzero, ord, field);
      if (!r.is_zero()) {
        res.passed = false;
        res.pair_i = i;
        res.pair_j = j;
        res.remainder = r;
        return res;
      }
    }
  return res;
}

namespace {

void enumerate_degree(size_t var, int remaining, Monomial& current,
                      const std::vector<Monomial>& initial_gens,
                      std::vector<Monomial>& out) {
  if (var + 1 == current.exp.size()) {
    current.exp[var] = remaining;
    bool excluded = false;
    for (const auto& g : initial_gens)
      if (g.divides(current)) {
        excluded = true;
        break;
      }
    if (!excluded) out.push_back(current);
    current.exp[var] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current.exp[var] = e;
    enumerate_degree(var + 1, remaining - e, current, initial_gens, out);
  }
  current.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int d) {
  if (d < 0) return {};
  if (!basis.complete) {
    bool homogeneous =
        std::all_of(basis.elements.begin(), basis.elements.end(),
                    [](const MultiPolynomial& g) { return g.is_homogeneous(); });
    // Deferred S-pairs all live above the cap; for homogeneous input any
    // missing initial-ideal generator does too, so low degrees stay certified.
    if (!homogeneous || d > basis.degree_cap)
      throw bound_error(
          "basis is incomplete; standard monomials of degree " +
          std::to_string(d) + " are not certified");
  }
  std::vector<Monomial> initial_gens;
  for (const auto& g : basis.elements) {
    const Monomial& lm = g.leading_term(basis.order).first;
    if (lm.degree() <= d) initial_gens.push_back(lm);
  }
  size_t n = basis.vars.size();
  if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial(0)}
                            : std::vector<Monomial>{};
  std::vector<Monomial> out;
  Monomial current(n);
  enumerate_degree(0, d, current, initial_gens, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return basis.order.less(a, b);
  });
  return out;
}

}  // namespace koszul
