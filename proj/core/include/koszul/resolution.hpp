#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/numbers.hpp"
#include "koszul/quotient_ring.hpp"

namespace koszul {

// Finite presentation of a graded module: free cover with generator degrees
// and homogeneous relation columns, entries in normal form.
struct GradedModulePresentation {
  std::shared_ptr<const QuotientRing> ring;
  std::vector<int> gen_degrees;
  struct Relation {
    std::vector<MultiPolynomial> entries;  // one per generator
    int degree = 0;
  };
  std::vector<Relation> relations;

  static GradedModulePresentation make(
      std::shared_ptr<const QuotientRing> ring, std::vector<int> gen_degrees,
      std::vector<std::vector<MultiPolynomial>> relation_columns);

  // Residue field k = R / (all variables).
  static GradedModulePresentation residue_field(
      std::shared_ptr<const QuotientRing> ring);
  // Cyclic module R / (elements).
  static GradedModulePresentation cyclic(
      std::shared_ptr<const QuotientRing> ring,
      const std::vector<MultiPolynomial>& elements);

  int max_relation_degree() const;
};

// Chain of free modules with matrix differentials over the ring.
struct GradedComplex {
  std::shared_ptr<const QuotientRing> ring;
  // degrees[i] lists the generator degrees of the i-th free module.
  std::vector<std::vector<int>> degrees;
  // diffs[i] (i >= 1) maps module i to module i-1; diffs[i][col][row].
  std::vector<std::vector<std::vector<MultiPolynomial>>> diffs;
};

// Coordinate layout of one internal-degree slice of a free module.
struct SliceLayout {
  std::vector<size_t> offsets;
  size_t total = 0;
};
SliceLayout slice_layout(const QuotientRing& ring,
                         const std::vector<int>& gen_degrees, int j);

// Dense matrix of the degree-j slice of diffs[i].
Matrix complex_slice(const GradedComplex& c, size_t i, int j);
bool complex_squares_to_zero(const GradedComplex& c, int max_internal_degree);
// Zeroes every differential entry whose degree differs from 1.
GradedComplex linear_part(const GradedComplex& c);

struct BettiTable {
  int h = 0, D = 0;
  bool aborted = false;
  std::map<std::pair<int, int>, Int> cells;

  Int beta(int i, int j) const;
  bool complete(int i, int j) const {
    return !aborted && i >= 0 && i <= h && j <= D;
  }
  // Largest internal degree with a nonzero entry in row i, within bounds.
  std::optional<int> row_max(int i) const;
  std::string str() const;
};

struct ResolutionTruncation {
  GradedComplex complex;
  int h = 0, D = 0;
  bool aborted = false;
  // Hilbert function of the presented module for degrees 0..D.
  std::vector<Int> module_hf;
};

// Called with every nonzero Betti cell as it is found; returning false
// abandons the sweep (the partial table keeps the cells seen so far).
using CellObserver = std::function<bool(int i, int j, const Int& beta)>;

std::pair<ResolutionTruncation, BettiTable> minimal_resolution(
    const GradedModulePresentation& M, int h, int D,
    const CellObserver& observer = nullptr);

int default_internal_bound(const GradedModulePresentation& M, int h);

// Validates d*d = 0, minimality, homogeneity of all entries.
void verify_resolution(const ResolutionTruncation& res);

}  // namespace koszul
