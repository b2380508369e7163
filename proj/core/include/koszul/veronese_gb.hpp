#pragma once

#include <string>
#include <vector>

#include "koszul/monomial.hpp"
#include "koszul/multipoly.hpp"

namespace koszul {

// Toric presentation of the second Veronese of n variables: one ambient
// variable x_{ij} per product x_i x_j (1 <= i <= j <= n), listed in
// lexicographic order of the index pairs.
std::vector<std::string> veronese2_vars(int n);

// Degrevlex priority: diagonal variables x_{ii} ascending, then the
// consecutive disjoint pairs x_{12}, x_{34}, ..., then the remaining
// off-diagonal variables in index order.
MonomialOrder veronese2_order(int n);

// Image of a monomial in the x_{ij} variables under x_{ij} -> x_i x_j,
// as an exponent vector over x_1..x_n.
std::vector<int> veronese2_multidegree(int n, const Monomial& m);

// Canonical kernel generators: for every degree-2 monomial m that is not
// the smallest in its multidegree fibre, the binomial m - min(fibre).
std::vector<MultiPolynomial> veronese2_kernel_gens(int n);

// Every equal-multidegree difference, not inter-reduced: one binomial per
// unordered pair within a fibre, larger term first.
std::vector<MultiPolynomial> veronese2_all_differences(int n);

// The initial ideal of the kernel split as squares of off-diagonal
// variables plus a squarefree quadratic part; the latter is re-embedded in
// the polynomial ring on the off-diagonal variables alone.
struct VeroneseInitialSplit {
  MonomialIdeal squares;  // over the full x_{ij} ambient
  MonomialIdeal linear;   // over the off-diagonal variables
};
VeroneseInitialSplit veronese2_initial_split(
    int n, const std::vector<MultiPolynomial>& kernel_gens,
    const MonomialOrder& order);

}  // namespace koszul
