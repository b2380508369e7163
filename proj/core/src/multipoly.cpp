#include "koszul/multipoly.hpp"

#include <algorithm>
#include <map>

#include "koszul/errors.hpp"

namespace koszul {

MonomialOrder MonomialOrder::standard(size_t nvars) {
  MonomialOrder ord;
  ord.priority.resize(nvars);
  for (size_t i = 0; i < nvars; ++i) ord.priority[i] = i;
  return ord;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Same degree: the monomial with the smaller exponent at the lowest
  // differing variable is the larger one (reverse-lexicographic rule).
  for (size_t k = 0; k < priority.size(); ++k) {
    int d = a.exp[priority[k]] - b.exp[priority[k]];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

MultiPolynomial MultiPolynomial::from_terms(
    std::vector<std::pair<Monomial, Rat>> raw, const Field& f) {
  std::map<Monomial, Rat> acc;
  for (auto& [m, c] : raw) {
    auto [it, fresh] = acc.emplace(m, f.canon(c));
    if (!fresh) it->second = f.add(it->second, c);
  }
  MultiPolynomial p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms.emplace_back(m, c);
  return p;
}

bool MultiPolynomial::is_homogeneous() const {
  if (terms.empty()) return true;
  int d = terms.front().first.degree();
  return std::all_of(terms.begin(), terms.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

int MultiPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

MultiPolynomial MultiPolynomial::plus(const MultiPolynomial& o,
                                      const Field& f) const {
  std::vector<std::pair<Monomial, Rat>> raw = terms;
  raw.insert(raw.end(), o.terms.begin(), o.terms.end());
  return from_terms(std::move(raw), f);
}

MultiPolynomial MultiPolynomial::minus(const MultiPolynomial& o,
                                       const Field& f) const {
  std::vector<std::pair<Monomial, Rat>> raw = terms;
  for (const auto& [m, c] : o.terms) raw.emplace_back(m, f.sub(Rat(0), c));
  return from_terms(std::move(raw), f);
}

MultiPolynomial MultiPolynomial::scaled(const Rat& c, const Field& f) const {
  if (f.is_zero(c)) return zero();
  MultiPolynomial p;
  for (const auto& [m, a] : terms) p.terms.emplace_back(m, f.mul(a, c));
  return p;
}

MultiPolynomial MultiPolynomial::times_monomial(const Monomial& m,
                                                const Field& f) const {
  (void)f;
  MultiPolynomial p;
  for (const auto& [mm, c] : terms) p.terms.emplace_back(mm.times(m), c);
  return p;
}

MultiPolynomial MultiPolynomial::times(const MultiPolynomial& o,
                                       const Field& f) const {
  std::vector<std::pair<Monomial, Rat>> raw;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms)
      raw.emplace_back(m1.times(m2), f.mul(c1, c2));
  return from_terms(std::move(raw), f);
}

const std::pair<Monomial, Rat>& MultiPolynomial::leading_term(
    const MonomialOrder& ord) const {
  if (terms.empty()) throw internal_error("leading term of zero polynomial");
  size_t best = 0;
  for (size_t i = 1; i < terms.size(); ++i)
    if (ord.less(terms[best].first, terms[i].first)) best = i;
  return terms[best];
}

MultiPolynomial MultiPolynomial::monic(const MonomialOrder& ord,
                                       const Field& f) const {
  if (terms.empty()) return *this;
  return scaled(f.inv(leading_term(ord).second), f);
}

bool MultiPolynomial::equals(const MultiPolynomial& o) const {
  return terms == o.terms;
}

std::string MultiPolynomial::str(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  // Highest degree first reads naturally.
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (size_t v = 0; v < vars.size(); ++v) {
      if (m.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (m.exp[v] > 1) mono += "^" + std::to_string(m.exp[v]);
    }
    if (mono.empty())
      s += to_string(a);
    else if (a == 1)
      s += mono;
    else
      s += to_string(a) + "*" + mono;
  }
  return s;
}

MultiPolynomial make_monomial_poly(const Monomial& m, const Rat& c) {
  MultiPolynomial p;
  if (c != 0) p.terms.emplace_back(m, c);
  return p;
}

}  // namespace koszul
