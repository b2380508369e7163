#pragma once

#include <string>
#include <vector>

namespace koszul {

// Simple undirected graph on named vertices.
struct VarGraph {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> adj;

  explicit VarGraph(std::vector<std::string> names_ = {});
  size_t size() const { return names.size(); }
  void add_edge(size_t u, size_t v);
  bool has_edge(size_t u, size_t v) const { return adj[u][v]; }
  size_t edge_count() const;
  std::vector<size_t> neighbors(size_t v) const;
};

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination order (vertex indices) when chordal.
  std::vector<size_t> elimination_order;
  // An induced cycle of length >= 4 (vertex indices, in cycle order) when not.
  std::vector<size_t> witness_cycle;
};

// Maximum-cardinality search plus an elimination-order verification pass.
// When the verification fails, hunts down an explicit chordless cycle.
ChordalityResult is_chordal(const VarGraph& g);

}  // namespace koszul
