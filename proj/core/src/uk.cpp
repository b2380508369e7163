#include "koszul/uk.hpp"

#include <algorithm>
#include <map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Monomial remap(const Monomial& m, const std::vector<std::string>& from,
               const std::map<std::string, size_t>& to_index, size_t arity) {
  Monomial r(arity);
  for (size_t v = 0; v < from.size(); ++v) {
    if (m.exp[v] == 0) continue;
    r.exp[to_index.at(from[v])] = m.exp[v];
  }
  return r;
}

std::map<std::string, size_t> index_of(const std::vector<std::string>& vars) {
  std::map<std::string, size_t> idx;
  for (size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
  return idx;
}

}  // namespace

std::string UKNode::str() const {
  switch (kind) {
    case Kind::BaseH:
      return "BaseH(" + std::to_string(base_m) + ")";
    case Kind::PolyExt:
      return "PolyExt(" + variable + "; " + children[0].str() + ")";
    case Kind::SquareZeroExt:
      return "SquareZeroExt(" + variable + "; " + children[0].str() + ")";
    case Kind::FibreProduct: {
      std::string s = "FibreProduct(";
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) s += ", ";
        s += children[i].str();
      }
      return s + ")";
    }
  }
  return "";
}

MonomialIdeal replay_derivation(const UKNode& node) {
  auto idx = index_of(node.vars);
  size_t n = node.vars.size();
  std::vector<Monomial> gens;

  switch (node.kind) {
    case UKNode::Kind::BaseH: {
      if (node.base_m != static_cast<int>(n))
        throw internal_error("base ring arity mismatch");
      if (n == 0) break;
      size_t z = idx.at(node.variable);
      for (size_t u = 0; u < n; ++u) {
        if (u == z) continue;
        for (size_t v = u; v < n; ++v) {
          if (v == z) continue;
          Monomial m(n);
          m.exp[u] += 1;
          m.exp[v] += 1;
          gens.push_back(m);
        }
      }
      Monomial sq(n);
      sq.exp[z] = 2;
      gens.push_back(sq);
      break;
    }
    case UKNode::Kind::PolyExt:
    case UKNode::Kind::SquareZeroExt: {
      MonomialIdeal inner = replay_derivation(node.children[0]);
      for (const auto& g : inner.gens)
        gens.push_back(remap(g, inner.vars, idx, n));
      if (node.kind == UKNode::Kind::SquareZeroExt) {
        Monomial sq(n);
        sq.exp[idx.at(node.variable)] = 2;
        gens.push_back(sq);
      }
      break;
    }
    case UKNode::Kind::FibreProduct: {
      std::vector<MonomialIdeal> parts;
      for (const auto& c : node.children) parts.push_back(replay_derivation(c));
      for (const auto& p : parts)
        for (const auto& g : p.gens) gens.push_back(remap(g, p.vars, idx, n));
      for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b)
          for (const auto& u : parts[a].vars)
            for (const auto& v : parts[b].vars) {
              Monomial m(n);
              m.exp[idx.at(u)] = 1;
              m.exp[idx.at(v)] = 1;
              gens.push_back(m);
            }
      break;
    }
  }
  return MonomialIdeal::make(node.vars, std::move(gens));
}

namespace {

std::optional<UKNode> recognize(const MonomialIdeal& ideal);

// Pattern (x_1..x_{m-1})^2 + (x_m^2) on the full ambient, any labelling.
std::optional<UKNode> match_base(const MonomialIdeal& ideal) {
  size_t n = ideal.vars.size();
  if (n == 0) {
    if (!ideal.gens.empty()) return std::nullopt;
    UKNode node;
    node.kind = UKNode::Kind::BaseH;
    node.base_m = 0;
    return node;
  }
  for (size_t z = 0; z < n; ++z) {
    UKNode node;
    node.kind = UKNode::Kind::BaseH;
    node.vars = ideal.vars;
    node.variable = ideal.vars[z];
    node.base_m = static_cast<int>(n);
    if (replay_derivation(node).same_ideal_as(ideal)) return node;
  }
  return std::nullopt;
}

std::optional<UKNode> recognize(const MonomialIdeal& ideal) {
  size_t n = ideal.vars.size();

  if (auto base = match_base(ideal)) return base;

  std::vector<bool> appears(n, false);
  for (const auto& g : ideal.gens)
    for (size_t v = 0; v < n; ++v)
      if (g.exp[v] > 0) appears[v] = true;

  // Peel an unused variable (taking the last keeps towers stable under
  // appending fresh variables).
  for (size_t v = n; v-- > 0;) {
    if (appears[v]) continue;
    std::vector<std::string> vars;
    for (size_t u = 0; u < n; ++u)
      if (u != v) vars.push_back(ideal.vars[u]);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) {
      Monomial m(n - 1);
      for (size_t u = 0, w = 0; u < n; ++u) {
        if (u == v) continue;
        m.exp[w++] = g.exp[u];
      }
      gens.push_back(m);
    }
    auto child = recognize(MonomialIdeal::make(vars, gens));
    if (!child) return std::nullopt;
    UKNode node;
    node.kind = UKNode::Kind::PolyExt;
    node.vars = ideal.vars;
    node.variable = ideal.vars[v];
    node.children.push_back(std::move(*child));
    return node;
  }

  // Peel a variable whose square is a generator and which occurs nowhere
  // else.
  for (size_t v = n; v-- > 0;) {
    bool square_gen = false, elsewhere = false;
    for (const auto& g : ideal.gens) {
      if (g.exp[v] == 2 && g.degree() == 2)
        square_gen = true;
      else if (g.exp[v] > 0)
        elsewhere = true;
    }
    if (!square_gen || elsewhere) continue;
    std::vector<std::string> vars;
    for (size_t u = 0; u < n; ++u)
      if (u != v) vars.push_back(ideal.vars[u]);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) {
      if (g.exp[v] == 2) continue;
      Monomial m(n - 1);
      for (size_t u = 0, w = 0; u < n; ++u) {
        if (u == v) continue;
        m.exp[w++] = g.exp[u];
      }
      gens.push_back(m);
    }
    auto child = recognize(MonomialIdeal::make(vars, gens));
    if (!child) return std::nullopt;
    UKNode node;
    node.kind = UKNode::Kind::SquareZeroExt;
    node.vars = ideal.vars;
    node.variable = ideal.vars[v];
    node.children.push_back(std::move(*child));
    return node;
  }

  // Split along components of the graph with u~v whenever uv is outside the
  // ideal; a disconnected graph means the ring is a fibre product.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<size_t> stack{s};
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < n; ++v) {
        if (v == u || comp[v] >= 0) continue;
        Monomial m(n);
        m.exp[u] += 1;
        m.exp[v] += 1;
        if (!ideal.contains(m)) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp < 2) return std::nullopt;

  UKNode node;
  node.kind = UKNode::Kind::FibreProduct;
  node.vars = ideal.vars;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::string> vars;
    std::vector<size_t> members;
    for (size_t v = 0; v < n; ++v)
      if (comp[v] == c) {
        vars.push_back(ideal.vars[v]);
        members.push_back(v);
      }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) {
      bool inside = true, touches = false;
      for (size_t v = 0; v < n; ++v) {
        if (g.exp[v] == 0) continue;
        if (comp[v] == c)
          touches = true;
        else
          inside = false;
      }
      if (!touches || !inside) continue;
      Monomial m(members.size());
      for (size_t w = 0; w < members.size(); ++w) m.exp[w] = g.exp[members[w]];
      gens.push_back(m);
    }
    auto child = recognize(MonomialIdeal::make(vars, gens));
    if (!child) return std::nullopt;
    node.children.push_back(std::move(*child));
  }
  return node;
}

}  // namespace

std::optional<UKNode> uk_recognize(const MonomialIdeal& ideal) {
  if (!ideal.is_quadratic())
    throw usage_error("recognizer needs a quadratic monomial ideal");
  auto tree = recognize(ideal);
  if (!tree) return std::nullopt;
  if (!replay_derivation(*tree).same_ideal_as(ideal))
    throw internal_error("derivation replay does not match the input ideal");
  return tree;
}

}  // namespace koszul
