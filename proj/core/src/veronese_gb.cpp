#include "koszul/veronese_gb.hpp"

#include <algorithm>
#include <map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void check_n(int n) {
  if (n < 2) throw usage_error("the second Veronese needs n >= 2");
}

std::string pair_name(int n, int i, int j) {
  if (n <= 9) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

// Ambient index of x_{ij} in the lexicographic pair listing.
size_t pair_index(int n, int i, int j) {
  size_t idx = 0;
  for (int t = 1; t < i; ++t) idx += static_cast<size_t>(n - t + 1);
  return idx + static_cast<size_t>(j - i);
}

size_t pair_count(int n) {
  return static_cast<size_t>(n) * static_cast<size_t>(n + 1) / 2;
}

// Inverse of pair_index, tabulated.
std::vector<std::pair<int, int>> index_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pairs.push_back({i, j});
  return pairs;
}

// Degree-2 monomials grouped by multidegree fibre, in enumeration order.
std::map<std::vector<int>, std::vector<Monomial>> fibres(int n) {
  size_t N = pair_count(n);
  std::map<std::vector<int>, std::vector<Monomial>> out;
  for (size_t p = 0; p < N; ++p)
    for (size_t q = p; q < N; ++q) {
      Monomial m(N);
      m.exp[p] += 1;
      m.exp[q] += 1;
      out[veronese2_multidegree(n, m)].push_back(std::move(m));
    }
  return out;
}

const Monomial& fibre_min(const std::vector<Monomial>& fibre,
                          const MonomialOrder& ord) {
  const Monomial* best = &fibre.front();
  for (const Monomial& m : fibre)
    if (ord.less(m, *best)) best = &m;
  return *best;
}

MultiPolynomial difference(const Monomial& big, const Monomial& small) {
  return MultiPolynomial::from_terms({{big, Rat(1)}, {small, Rat(-1)}},
                                     Field{});
}

}  // namespace

std::vector<std::string> veronese2_vars(int n) {
  check_n(n);
  std::vector<std::string> names;
  names.reserve(pair_count(n));
  for (auto [i, j] : index_pairs(n)) names.push_back(pair_name(n, i, j));
  return names;
}

MonomialOrder veronese2_order(int n) {
  check_n(n);
  MonomialOrder ord;
  ord.priority.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i) ord.priority.push_back(pair_index(n, i, i));
  for (int k = 1; 2 * k <= n; ++k)
    ord.priority.push_back(pair_index(n, 2 * k - 1, 2 * k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j == i + 1 && i % 2 == 1) continue;  // a consecutive disjoint pair
      ord.priority.push_back(pair_index(n, i, j));
    }
  return ord;
}

std::vector<int> veronese2_multidegree(int n, const Monomial& m) {
  std::vector<int> deg(n, 0);
  auto pairs = index_pairs(n);
  for (size_t v = 0; v < m.exp.size(); ++v) {
    if (m.exp[v] == 0) continue;
    deg[pairs[v].first - 1] += m.exp[v];
    deg[pairs[v].second - 1] += m.exp[v];
  }
  return deg;
}

std::vector<MultiPolynomial> veronese2_kernel_gens(int n) {
  check_n(n);
  MonomialOrder ord = veronese2_order(n);
  std::vector<MultiPolynomial> gens;
  for (const auto& [deg, fibre] : fibres(n)) {
    if (fibre.size() < 2) continue;
    const Monomial& mn = fibre_min(fibre, ord);
    for (const Monomial& m : fibre)
      if (!(m == mn)) gens.push_back(difference(m, mn));
  }
  return gens;
}

std::vector<MultiPolynomial> veronese2_all_differences(int n) {
  check_n(n);
  MonomialOrder ord = veronese2_order(n);
  std::vector<MultiPolynomial> gens;
  for (const auto& [deg, fibre] : fibres(n)) {
    for (size_t a = 0; a < fibre.size(); ++a)
      for (size_t b = a + 1; b < fibre.size(); ++b) {
        bool ab = ord.less(fibre[a], fibre[b]);
        gens.push_back(
            difference(fibre[ab ? b : a], fibre[ab ? a : b]));
      }
  }
  return gens;
}

VeroneseInitialSplit veronese2_initial_split(
    int n, const std::vector<MultiPolynomial>& kernel_gens,
    const MonomialOrder& order) {
  check_n(n);
  auto pairs = index_pairs(n);
  size_t N = pair_count(n);

  std::vector<size_t> offdiag;  // ambient indices of the x_{ij}, i < j
  std::vector<size_t> position(N, N);
  for (size_t v = 0; v < N; ++v)
    if (pairs[v].first != pairs[v].second) {
      position[v] = offdiag.size();
      offdiag.push_back(v);
    }

  std::vector<Monomial> squares, linear;
  for (const auto& g : kernel_gens) {
    const Monomial& lt = g.leading_term(order).first;
    if (lt.degree() != 2)
      throw internal_error("kernel generator is not quadratic");
    std::vector<size_t> support;
    for (size_t v = 0; v < N; ++v)
      for (int e = 0; e < lt.exp[v]; ++e) support.push_back(v);
    bool all_offdiag = position[support[0]] < N && position[support[1]] < N;
    if (!all_offdiag)
      throw internal_error(
          "leading term of a kernel generator touches a diagonal variable");
    if (support[0] == support[1]) {
      squares.push_back(lt);
    } else {
      Monomial small(offdiag.size());
      small.exp[position[support[0]]] += 1;
      small.exp[position[support[1]]] += 1;
      linear.push_back(std::move(small));
    }
  }

  std::vector<std::string> names = veronese2_vars(n);
  std::vector<std::string> offdiag_names;
  for (size_t v : offdiag) offdiag_names.push_back(names[v]);

  VeroneseInitialSplit split;
  split.squares = MonomialIdeal::make(names, std::move(squares));
  split.linear =
      MonomialIdeal::make(std::move(offdiag_names), std::move(linear));
  return split;
}

}  // namespace koszul
