#include "koszul/ring_checks.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

KoszulReport koszul_check(std::shared_ptr<const QuotientRing> R, int h, int D) {
  if (D < h)
    throw bound_error("internal-degree bound must be at least the "
                      "homological bound for a diagonal check");
  KoszulReport rep;
  rep.h = h;
  rep.D = D;
  GradedModulePresentation M = GradedModulePresentation::residue_field(R);
  auto [res, table] = minimal_resolution(M, h, D, [&](int i, int j,
                                                      const Int& beta) {
    if (i == j) return true;
    rep.has_cell = true;
    rep.cell_i = i;
    rep.cell_j = j;
    rep.cell_beta = beta;
    return false;
  });
  rep.table = std::move(table);
  rep.passed = !rep.has_cell;
  return rep;
}

GolodReport golod_map_check(std::shared_ptr<const QuotientRing> Q,
                            const std::vector<MultiPolynomial>& extra_gens,
                            int h, int D) {
  GolodReport rep;
  rep.h = h;
  rep.D = D;
  for (const auto& g : extra_gens) {
    MultiPolynomial nf = Q->reduce(g);
    if (nf.is_zero()) continue;  // already zero in Q
    if (!nf.is_homogeneous())
      throw usage_error("extra generators must be homogeneous");
    if (nf.degree() < 2)
      throw usage_error(
          "extra generators must lie in the square of the maximal ideal");
    rep.extra_gens.push_back(std::move(nf));
  }

  rep.base = koszul_check(Q, h, D);

  GradedModulePresentation M =
      GradedModulePresentation::cyclic(Q, rep.extra_gens);
  auto [res, table] = minimal_resolution(M, h, D, [&](int i, int j,
                                                      const Int& beta) {
    if (j <= i + 1) return true;
    rep.has_cell = true;
    rep.cell_i = i;
    rep.cell_j = j;
    rep.cell_beta = beta;
    return false;
  });
  rep.table = std::move(table);
  rep.passed = rep.base.passed && !rep.has_cell;
  return rep;
}

namespace {

using Grid = std::vector<std::vector<Int>>;

Grid zero_grid(int hmax, int jmax) {
  return Grid(hmax + 1, std::vector<Int>(jmax + 1, Int(0)));
}

Grid from_table(const BettiTable& t, int hmax, int jmax) {
  Grid g = zero_grid(hmax, jmax);
  for (const auto& [cell, beta] : t.cells)
    if (cell.first <= hmax && cell.second <= jmax && cell.first >= 0 &&
        cell.second >= 0)
      g[cell.first][cell.second] = beta;
  return g;
}

Grid convolve(const Grid& a, const Grid& b, int hmax, int jmax) {
  Grid g = zero_grid(hmax, jmax);
  for (int i = 0; i <= hmax; ++i)
    for (int j = 0; j <= jmax; ++j) {
      if (a[i][j] == 0) continue;
      for (int ii = 0; i + ii <= hmax; ++ii)
        for (int jj = 0; j + jj <= jmax; ++jj)
          if (b[ii][jj] != 0) g[i + ii][j + jj] += a[i][j] * b[ii][jj];
    }
  return g;
}

bool grid_zero(const Grid& g) {
  for (const auto& row : g)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

SerreReport serre_check(const BettiTable& k_over_Q, const BettiTable& R_over_Q,
                        const BettiTable& k_over_R, int bound) {
  for (const BettiTable* t : {&k_over_Q, &R_over_Q, &k_over_R}) {
    if (t->aborted)
      throw bound_error("a Betti table was truncated by an aborted sweep");
    if (t->D < bound)
      throw bound_error("Betti tables certified only to internal degree " +
                        std::to_string(t->D) + ", comparison needs " +
                        std::to_string(bound));
  }
  int H = std::min({k_over_Q.h, R_over_Q.h, k_over_R.h});

  SerreReport rep;
  rep.homological_window = H;
  rep.bound = bound;

  // One surjection letter of homological degree i acts with degree i + 1
  // in a composite word, so the series 1/(1 - z u) is expanded with the
  // letters shifted up by one homological step.
  Grid u = zero_grid(H, bound);
  for (const auto& [cell, beta] : R_over_Q.cells) {
    if (cell.first == 0 && cell.second == 0) continue;
    int i = cell.first + 1, j = cell.second;
    if (i <= H && j <= bound) u[i][j] += beta;
  }

  Grid sum = zero_grid(H, bound);
  sum[0][0] = 1;
  Grid power = sum;
  for (int m = 1; m <= H; ++m) {
    power = convolve(power, u, H, bound);
    if (grid_zero(power)) break;
    for (int i = 0; i <= H; ++i)
      for (int j = 0; j <= bound; ++j) sum[i][j] += power[i][j];
  }

  Grid rhs = convolve(from_table(k_over_Q, H, bound), sum, H, bound);
  Grid lhs = from_table(k_over_R, H, bound);

  rep.inequality = true;
  rep.equality = true;
  for (int i = 0; i <= H; ++i)
    for (int j = 0; j <= bound; ++j) {
      if (lhs[i][j] > rhs[i][j] && !rep.has_ineq_cell) {
        rep.inequality = false;
        rep.has_ineq_cell = true;
        rep.ineq_i = i;
        rep.ineq_j = j;
      }
      if (lhs[i][j] != rhs[i][j] && !rep.has_eq_cell) {
        rep.equality = false;
        rep.has_eq_cell = true;
        rep.eq_i = i;
        rep.eq_j = j;
        rep.eq_lhs = lhs[i][j];
        rep.eq_rhs = rhs[i][j];
      }
    }
  return rep;
}

LinearityReport linearity_defect(const GradedModulePresentation& M, int h,
                                 int D) {
  LinearityReport rep;
  rep.h = h;
  rep.D = D;
  auto [res, table] = minimal_resolution(M, h, D);
  rep.table = std::move(table);
  rep.stable = !res.aborted;

  GradedComplex lin = linear_part(res.complex);
  const QuotientRing& R = *M.ring;
  const Field& f = R.field();

  // The resolution can terminate before level h; levels past the end are
  // zero modules with zero differentials.
  const int top = static_cast<int>(
                      std::min(lin.degrees.size(), lin.diffs.size())) -
                  1;

  // ranks[i][j] = rank of the degree-j slice of the i-th linear differential.
  std::vector<std::vector<size_t>> ranks(h + 1,
                                         std::vector<size_t>(D + 1, 0));
  for (int i = 1; i <= std::min(h, top); ++i)
    for (int j = 0; j <= D; ++j)
      ranks[i][j] = rank(complex_slice(lin, i, j), f);

  for (int i = 1; i <= std::min(h - 1, top); ++i)
    for (int j = 0; j <= D; ++j) {
      size_t cols = slice_layout(R, lin.degrees[i], j).total;
      size_t nullity = cols - ranks[i][j];
      if (nullity < ranks[i + 1][j])
        throw internal_error("linear part does not form a complex");
      size_t hom = nullity - ranks[i + 1][j];
      if (hom == 0) continue;
      if (i > rep.lind_lower_bound || !rep.has_witness) {
        rep.lind_lower_bound = i;
        rep.has_witness = true;
        rep.witness_i = i;
        rep.witness_j = j;
        rep.witness_dim = Int(static_cast<long>(hom));
      }
    }
  return rep;
}

}  // namespace koszul
