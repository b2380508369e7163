#include "koszul/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "koszul/errors.hpp"

namespace koszul {

int Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), 0);
}

bool Monomial::divides(const Monomial& m) const {
  if (exp.size() != m.exp.size()) return false;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > m.exp[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r(exp.size());
  for (size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] + m.exp[i];
  return r;
}

Monomial Monomial::divide(const Monomial& m) const {
  Monomial r(exp.size());
  for (size_t i = 0; i < exp.size(); ++i) {
    r.exp[i] = exp[i] - m.exp[i];
    if (r.exp[i] < 0) throw internal_error("monomial division underflow");
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp.size());
  for (size_t i = 0; i < a.exp.size(); ++i)
    r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp.size());
  for (size_t i = 0; i < a.exp.size(); ++i)
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return exp < o.exp;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    // A later generator can also make an earlier one redundant.
    std::erase_if(out, [&](const Monomial& kept) { return g.divides(kept); });
    out.push_back(g);
  }
  return out;
}

std::vector<Monomial> monomial_colon(const std::vector<Monomial>& gens,
                                     const Monomial& a) {
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) quot.push_back(g.divide(Monomial::gcd(g, a)));
  return minimal_generators(std::move(quot));
}

bool is_monomial_regular_sequence(const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.is_one()) return false;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) return false;
  return true;
}

MonomialIdeal MonomialIdeal::make(std::vector<std::string> vars,
                                  std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.exp.size() != vars.size())
      throw internal_error("monomial arity does not match variable count");
  MonomialIdeal id;
  id.vars = std::move(vars);
  id.gens = minimal_generators(std::move(gens));
  return id;
}

bool MonomialIdeal::is_quadratic() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& g) { return g.degree() == 2; });
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens)
    for (int e : g.exp)
      if (e > 1) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::same_ideal_as(const MonomialIdeal& o) const {
  if (vars != o.vars) return false;
  auto a = gens, b = o.gens;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string MonomialIdeal::gen_str(size_t i) const {
  const Monomial& g = gens[i];
  if (g.is_one()) return "1";
  std::string s;
  for (size_t v = 0; v < vars.size(); ++v) {
    if (g.exp[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (g.exp[v] > 1) s += "^" + std::to_string(g.exp[v]);
  }
  return s;
}

std::string MonomialIdeal::str() const {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gen_str(i);
  }
  return s + ")";
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic())
    throw usage_error("polarization implemented for quadratic ideals only");
  size_t n = ideal.vars.size();
  // Primed companions only for variables that actually appear squared.
  std::vector<bool> squared(n, false);
  for (const auto& g : ideal.gens)
    for (size_t v = 0; v < n; ++v)
      if (g.exp[v] == 2) squared[v] = true;

  std::vector<std::string> vars = ideal.vars;
  std::vector<int> primed_index(n, -1);
  for (size_t v = 0; v < n; ++v)
    if (squared[v]) {
      primed_index[v] = static_cast<int>(vars.size());
      vars.push_back(ideal.vars[v] + "'");
    }

  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens) {
    Monomial m(vars.size());
    for (size_t v = 0; v < n; ++v) {
      if (g.exp[v] == 2) {
        m.exp[v] = 1;
        m.exp[primed_index[v]] = 1;
      } else {
        m.exp[v] = g.exp[v];
      }
    }
    gens.push_back(m);
  }
  return MonomialIdeal::make(std::move(vars), std::move(gens));
}

MonomialIdeal fibre_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::set<std::string> seen(a.vars.begin(), a.vars.end());
  for (const auto& v : b.vars)
    if (seen.count(v))
      throw usage_error("fibre product requires disjoint variable sets; '" +
                        v + "' appears on both sides");

  std::vector<std::string> vars = a.vars;
  vars.insert(vars.end(), b.vars.begin(), b.vars.end());
  size_t na = a.vars.size(), nb = b.vars.size();

  auto lift_a = [&](const Monomial& m) {
    Monomial r(na + nb);
    std::copy(m.exp.begin(), m.exp.end(), r.exp.begin());
    return r;
  };
  auto lift_b = [&](const Monomial& m) {
    Monomial r(na + nb);
    std::copy(m.exp.begin(), m.exp.end(), r.exp.begin() + na);
    return r;
  };

  std::vector<Monomial> gens;
  for (const auto& g : a.gens) gens.push_back(lift_a(g));
  for (const auto& g : b.gens) gens.push_back(lift_b(g));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j) {
      Monomial m(na + nb);
      m.exp[i] = 1;
      m.exp[na + j] = 1;
      gens.push_back(m);
    }
  return MonomialIdeal::make(std::move(vars), std::move(gens));
}

}  // namespace koszul
