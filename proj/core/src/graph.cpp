#include "koszul/graph.hpp"

#include <algorithm>
#include <deque>

#include "koszul/errors.hpp"

namespace koszul {

VarGraph::VarGraph(std::vector<std::string> names_) : names(std::move(names_)) {
  adj.assign(names.size(), std::vector<bool>(names.size(), false));
}

void VarGraph::add_edge(size_t u, size_t v) {
  if (u == v) throw usage_error("graph loops are not allowed");
  adj[u][v] = adj[v][u] = true;
}

size_t VarGraph::edge_count() const {
  size_t c = 0;
  for (size_t u = 0; u < size(); ++u)
    for (size_t v = u + 1; v < size(); ++v)
      if (adj[u][v]) ++c;
  return c;
}

std::vector<size_t> VarGraph::neighbors(size_t v) const {
  std::vector<size_t> out;
  for (size_t u = 0; u < size(); ++u)
    if (adj[v][u]) out.push_back(u);
  return out;
}

namespace {

// Maximum-cardinality search. Returns vertices in visit order; reversing it
// gives the candidate elimination order.
std::vector<size_t> mcs_order(const VarGraph& g) {
  size_t n = g.size();
  std::vector<int> weight(n, 0);
  std::vector<bool> used(n, false);
  std::vector<size_t> order;
  order.reserve(n);
  for (size_t step = 0; step < n; ++step) {
    size_t best = n;
    for (size_t v = 0; v < n; ++v)
      if (!used[v] && (best == n || weight[v] > weight[best])) best = v;
    used[best] = true;
    order.push_back(best);
    for (size_t u = 0; u < n; ++u)
      if (!used[u] && g.adj[best][u]) ++weight[u];
  }
  return order;
}

// Checks that eliminating vertices in the given order only ever removes
// simplicial vertices w.r.t. the later part: for each v, the neighbors of v
// that come later in the order must form a clique. Returns the index of the
// first offending vertex, or n if the order is perfect.
size_t verify_elimination(const VarGraph& g, const std::vector<size_t>& order) {
  size_t n = g.size();
  std::vector<size_t> pos(n);
  for (size_t i = 0; i < n; ++i) pos[order[i]] = i;
  for (size_t i = 0; i < n; ++i) {
    size_t v = order[i];
    std::vector<size_t> later;
    for (size_t u : g.neighbors(v))
      if (pos[u] > i) later.push_back(u);
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.adj[later[a]][later[b]]) return i;
  }
  return n;
}

// Shortest path from s to t inside the vertex set marked allowed, or empty.
std::vector<size_t> restricted_path(const VarGraph& g,
                                    const std::vector<bool>& allowed, size_t s,
                                    size_t t) {
  size_t n = g.size();
  std::vector<size_t> prev(n, n);
  std::vector<bool> seen(n, false);
  std::deque<size_t> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (size_t u = 0; u < n; ++u)
      if (g.adj[v][u] && allowed[u] && !seen[u]) {
        seen[u] = true;
        prev[u] = v;
        queue.push_back(u);
      }
  }
  if (!seen[t]) return {};
  std::vector<size_t> path;
  for (size_t v = t; v != n; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// A graph fails the elimination check exactly when some vertex v has two
// nonadjacent neighbors x, y joined by a path avoiding the rest of N[v];
// the shortest such path closes up with v into a chordless cycle.
std::vector<size_t> find_chordless_cycle(const VarGraph& g) {
  size_t n = g.size();
  std::vector<size_t> best;
  for (size_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        size_t x = nb[a], y = nb[b];
        if (g.adj[x][y]) continue;
        std::vector<bool> allowed(n, true);
        allowed[v] = false;
        for (size_t u : nb) allowed[u] = false;
        allowed[x] = allowed[y] = true;
        auto path = restricted_path(g, allowed, x, y);
        if (path.empty()) continue;
        path.push_back(v);  // x ... y v, a cycle of length path.size()
        if (best.empty() || path.size() < best.size()) best = path;
      }
  }
  return best;
}

// Any two nonconsecutive cycle vertices must be nonadjacent.
void check_cycle_is_chordless(const VarGraph& g,
                              const std::vector<size_t>& cyc) {
  size_t k = cyc.size();
  if (k < 4) throw internal_error("cycle witness too short");
  for (size_t i = 0; i < k; ++i) {
    if (!g.adj[cyc[i]][cyc[(i + 1) % k]])
      throw internal_error("cycle witness is not a cycle");
    for (size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adj[cyc[i]][cyc[j]])
        throw internal_error("cycle witness has a chord");
    }
  }
}

}  // namespace

ChordalityResult is_chordal(const VarGraph& g) {
  ChordalityResult res;
  auto visit = mcs_order(g);
  std::vector<size_t> order(visit.rbegin(), visit.rend());
  if (verify_elimination(g, order) == g.size()) {
    res.chordal = true;
    res.elimination_order = std::move(order);
    return res;
  }
  res.chordal = false;
  res.witness_cycle = find_chordless_cycle(g);
  if (res.witness_cycle.empty())
    throw internal_error(
        "elimination check failed but no chordless cycle was found");
  check_cycle_is_chordless(g, res.witness_cycle);
  return res;
}

}  // namespace koszul
