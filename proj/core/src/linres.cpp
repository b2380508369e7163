#include "koszul/linres.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

VarGraph nonedge_graph(const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic() || !ideal.is_squarefree())
    throw usage_error("non-edge graph needs a squarefree quadratic ideal");
  size_t n = ideal.vars.size();
  VarGraph g(ideal.vars);
  for (size_t u = 0; u < n; ++u)
    for (size_t v = u + 1; v < n; ++v) {
      Monomial m(n);
      m.exp[u] = m.exp[v] = 1;
      if (!ideal.contains(m)) g.add_edge(u, v);
    }
  return g;
}

TwoLinearResult has_two_linear_resolution(const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic())
    throw usage_error("linear-resolution test needs a quadratic ideal");
  TwoLinearResult res;
  res.polarized = ideal.is_squarefree() ? ideal : polarize(ideal);
  VarGraph g = nonedge_graph(res.polarized);
  res.chordality = is_chordal(g);
  res.passed = res.chordality.chordal;
  for (size_t v : res.chordality.elimination_order)
    res.elimination_names.push_back(g.names[v]);
  for (size_t v : res.chordality.witness_cycle)
    res.cycle_names.push_back(g.names[v]);
  return res;
}

namespace {

bool colon_is_variable_generated(const std::vector<Monomial>& prefix,
                                 const Monomial& next) {
  auto colon = monomial_colon(prefix, next);
  return std::all_of(colon.begin(), colon.end(),
                     [](const Monomial& m) { return m.degree() == 1; });
}

bool extend_ordering(const MonomialIdeal& ideal, std::vector<size_t>& order,
                     std::vector<bool>& used) {
  if (order.size() == ideal.gens.size()) return true;
  std::vector<Monomial> prefix;
  for (size_t idx : order) prefix.push_back(ideal.gens[idx]);
  for (size_t i = 0; i < ideal.gens.size(); ++i) {
    if (used[i]) continue;
    if (!prefix.empty() &&
        !colon_is_variable_generated(prefix, ideal.gens[i]))
      continue;
    used[i] = true;
    order.push_back(i);
    if (extend_ordering(ideal, order, used)) return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<size_t>> linear_quotients_order(
    const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic())
    throw usage_error("linear quotients implemented for quadratic ideals");
  std::vector<size_t> order;
  std::vector<bool> used(ideal.gens.size(), false);
  if (extend_ordering(ideal, order, used)) return order;
  return std::nullopt;
}

namespace {

MonomialIdeal subset_ideal(const MonomialIdeal& ideal,
                           const std::vector<size_t>& picks) {
  std::vector<Monomial> gens;
  for (size_t i : picks) gens.push_back(ideal.gens[i]);
  return MonomialIdeal::make(ideal.vars, std::move(gens));
}

std::optional<BRCertificate> try_split(const MonomialIdeal& ideal,
                                       const std::vector<size_t>& u_picks) {
  std::vector<bool> in_u(ideal.gens.size(), false);
  for (size_t i : u_picks) in_u[i] = true;
  std::vector<size_t> v_picks;
  for (size_t i = 0; i < ideal.gens.size(); ++i)
    if (!in_u[i]) v_picks.push_back(i);

  BRCertificate cert;
  cert.ci_part = subset_ideal(ideal, u_picks);
  cert.linear_part = subset_ideal(ideal, v_picks);
  cert.evidence = has_two_linear_resolution(cert.linear_part);
  if (!cert.evidence.passed) return std::nullopt;
  if (cert.linear_part.gens.size() <= 10)
    cert.linear_quotients = linear_quotients_order(cert.linear_part);
  return cert;
}

void collect_coprime_subsets(const MonomialIdeal& ideal,
                             const std::vector<size_t>& pool, size_t from,
                             std::vector<size_t>& current,
                             std::vector<std::vector<size_t>>& out) {
  if (out.size() > (1u << 20))
    throw bound_error("certificate search space is too large");
  out.push_back(current);
  for (size_t k = from; k < pool.size(); ++k) {
    size_t g = pool[k];
    bool ok = true;
    for (size_t chosen : current)
      if (!ideal.gens[chosen].coprime(ideal.gens[g])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(g);
    collect_coprime_subsets(ideal, pool, k + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<BRCertificate> ci_plus_two_linear(const MonomialIdeal& ideal,
                                                size_t generator_cap) {
  if (!ideal.is_quadratic())
    throw usage_error("certificate search needs a quadratic ideal");
  if (ideal.gens.size() > generator_cap)
    throw bound_error("too many generators for the certificate search (" +
                      std::to_string(ideal.gens.size()) + " > " +
                      std::to_string(generator_cap) + ")");

  size_t r = ideal.gens.size();
  // Generators sharing no variable with any other generator always embed in
  // a regular sequence without affecting the rest; commit them first.
  std::vector<size_t> isolated, entangled;
  for (size_t i = 0; i < r; ++i) {
    bool alone = true;
    for (size_t j = 0; j < r; ++j)
      if (j != i && !ideal.gens[i].coprime(ideal.gens[j])) {
        alone = false;
        break;
      }
    (alone ? isolated : entangled).push_back(i);
  }

  if (auto cert = try_split(ideal, isolated)) return cert;

  // Widen: any pairwise-coprime subset of the remaining generators may join.
  std::vector<std::vector<size_t>> subsets;
  std::vector<size_t> current;
  collect_coprime_subsets(ideal, entangled, 0, current, subsets);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a < b;
                   });
  for (const auto& extra : subsets) {
    if (extra.empty()) continue;  // already tried above
    std::vector<size_t> u_picks = isolated;
    u_picks.insert(u_picks.end(), extra.begin(), extra.end());
    std::sort(u_picks.begin(), u_picks.end());
    if (auto cert = try_split(ideal, u_picks)) return cert;
  }
  return std::nullopt;
}

bool validate_certificate(const MonomialIdeal& ideal, const BRCertificate& c) {
  if (!is_monomial_regular_sequence(c.ci_part.gens) &&
      !c.ci_part.gens.empty())
    return false;
  auto all = c.ci_part.gens;
  all.insert(all.end(), c.linear_part.gens.begin(), c.linear_part.gens.end());
  if (!MonomialIdeal::make(ideal.vars, all).same_ideal_as(ideal)) return false;
  // Replay the chordality evidence from scratch.
  auto replay = has_two_linear_resolution(c.linear_part);
  if (!replay.passed) return false;
  if (c.linear_quotients) {
    const auto& ord = *c.linear_quotients;
    if (ord.size() != c.linear_part.gens.size()) return false;
    std::vector<Monomial> prefix;
    for (size_t k = 0; k < ord.size(); ++k) {
      const Monomial& next = c.linear_part.gens[ord[k]];
      if (k > 0) {
        auto colon = monomial_colon(prefix, next);
        for (const auto& m : colon)
          if (m.degree() != 1) return false;
      }
      prefix.push_back(next);
    }
  }
  return true;
}

}  // namespace koszul
