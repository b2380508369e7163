#include "koszul/quotient_ring.hpp"

#include "koszul/errors.hpp"

namespace koszul {

QuotientRing::QuotientRing(std::vector<std::string> vars,
                           std::vector<MultiPolynomial> ideal_gens,
                           const MonomialOrder& order, const Field& field,
                           int cap)
    : vars_(std::move(vars)) {
  basis_ = buchberger(vars_, ideal_gens, order, field, cap);
  certified_ = basis_.complete ? std::numeric_limits<int>::max() : cap;
}

void QuotientRing::ensure_certified(int degree) const {
  if (degree > certified_)
    throw bound_error("ring slice of degree " + std::to_string(degree) +
                      " exceeds the certified bound " +
                      std::to_string(certified_));
}

const std::vector<Monomial>& QuotientRing::monomials(int degree) const {
  auto it = slices_.find(degree);
  if (it != slices_.end()) return it->second;
  ensure_certified(degree < 0 ? 0 : degree);
  auto mons = degree < 0 ? std::vector<Monomial>{}
                         : standard_monomials(basis_, degree);
  auto& stored = slices_[degree] = std::move(mons);
  auto& idx = indices_[degree];
  for (size_t i = 0; i < stored.size(); ++i) idx[stored[i]] = i;
  return stored;
}

size_t QuotientRing::index(int degree, const Monomial& m) const {
  monomials(degree);
  const auto& idx = indices_.at(degree);
  auto it = idx.find(m);
  if (it == idx.end())
    throw internal_error("monomial is not a standard monomial of its degree");
  return it->second;
}

MultiPolynomial QuotientRing::reduce(const MultiPolynomial& f) const {
  MultiPolynomial out;
  const Field& k = field();
  for (const auto& [m, c] : f.terms) {
    auto it = monomial_nf_.find(m);
    if (it == monomial_nf_.end()) {
      MultiPolynomial nf = normal_form(make_monomial_poly(m, Rat(1)),
                                       basis_.elements, basis_.order, k);
      it = monomial_nf_.emplace(m, std::move(nf)).first;
    }
    out = out.plus(it->second.scaled(c, k), k);
  }
  return out;
}

Vec QuotientRing::coordinates(const MultiPolynomial& f, int degree) const {
  const auto& mons = monomials(degree);
  Vec v(mons.size(), Rat(0));
  MultiPolynomial r = reduce(f);
  for (const auto& [m, c] : r.terms) {
    if (m.degree() != degree)
      throw internal_error("inhomogeneous element in a graded slice");
    v[index(degree, m)] = c;
  }
  return v;
}

MultiPolynomial QuotientRing::from_coordinates(const Vec& v,
                                               int degree) const {
  const auto& mons = monomials(degree);
  if (v.size() != mons.size()) throw internal_error("slice length mismatch");
  std::vector<std::pair<Monomial, Rat>> terms;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.emplace_back(mons[i], v[i]);
  return MultiPolynomial::from_terms(std::move(terms), field());
}

const Matrix& QuotientRing::variable_map(size_t v, int degree) const {
  auto key = std::make_pair(v, degree);
  auto it = var_maps_.find(key);
  if (it != var_maps_.end()) return it->second;

  const auto& src = monomials(degree);
  const auto& dst = monomials(degree + 1);
  Matrix m(dst.size(), src.size());
  Monomial xv(nvars());
  xv.exp[v] = 1;
  for (size_t c = 0; c < src.size(); ++c) {
    MultiPolynomial img =
        reduce(make_monomial_poly(src[c].times(xv), Rat(1)));
    for (const auto& [mono, coef] : img.terms)
      m.at(index(degree + 1, mono), c) = coef;
  }
  return var_maps_.emplace(key, std::move(m)).first->second;
}

std::shared_ptr<QuotientRing> polynomial_ring(std::vector<std::string> vars,
                                              const Field& field, int cap) {
  MonomialOrder ord = MonomialOrder::standard(vars.size());
  return std::make_shared<QuotientRing>(std::move(vars),
                                        std::vector<MultiPolynomial>{}, ord,
                                        field, cap);
}

}  // namespace koszul
