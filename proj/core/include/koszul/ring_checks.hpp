#pragma once

#include <memory>
#include <vector>

#include "koszul/resolution.hpp"

namespace koszul {

// Outcome of testing whether the residue field has a linear resolution
// within the window (h, D): beta_{i,j}(k) = 0 for all i != j, i <= h.
struct KoszulReport {
  bool passed = false;
  bool has_cell = false;  // offending off-diagonal cell when failed
  int cell_i = 0, cell_j = 0;
  Int cell_beta;
  BettiTable table;
  int h = 0, D = 0;
};

KoszulReport koszul_check(std::shared_ptr<const QuotientRing> R, int h, int D);

// Tests the Golod property of the surjection Q -> R = Q/(extra generators):
// Q must pass koszul_check and the Q-free resolution of R must satisfy
// t_i <= i + 1 for every certified row i <= h.
struct GolodReport {
  bool passed = false;
  KoszulReport base;            // the check on Q itself
  bool has_cell = false;        // first row violation t_i > i + 1
  int cell_i = 0, cell_j = 0;
  Int cell_beta;
  BettiTable table;             // R resolved as a Q-module
  std::vector<MultiPolynomial> extra_gens;  // normal forms, zeros dropped
  int h = 0, D = 0;
};

GolodReport golod_map_check(std::shared_ptr<const QuotientRing> Q,
                            const std::vector<MultiPolynomial>& extra_gens,
                            int h, int D);

// Coefficientwise comparison of the bigraded Poincare series of k over R
// against the bound P_k^Q / (1 - z (P_R^Q - 1)), expanded as a truncated
// series; cells (i, j) with i <= min h and j <= bound are compared.
struct SerreReport {
  bool inequality = false;
  bool equality = false;
  int homological_window = 0;
  int bound = 0;
  bool has_ineq_cell = false;
  int ineq_i = 0, ineq_j = 0;
  bool has_eq_cell = false;  // first strict cell when equality fails
  int eq_i = 0, eq_j = 0;
  Int eq_lhs, eq_rhs;
};

SerreReport serre_check(const BettiTable& k_over_Q, const BettiTable& R_over_Q,
                        const BettiTable& k_over_R, int bound);

// Largest homological degree i in 1..h-1 where the linear part of the
// minimal resolution has nonzero homology; 0 when it is exact there.
struct LinearityReport {
  int lind_lower_bound = 0;
  bool stable = false;  // scan covered the full requested window
  bool has_witness = false;
  int witness_i = 0, witness_j = 0;
  Int witness_dim;
  BettiTable table;
  int h = 0, D = 0;
};

LinearityReport linearity_defect(const GradedModulePresentation& M, int h,
                                 int D);

}  // namespace koszul
