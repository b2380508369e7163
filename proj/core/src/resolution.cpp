#include "koszul/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

int entry_degree(const MultiPolynomial& p) {
  if (p.is_zero()) return -1;
  if (!p.is_homogeneous())
    throw usage_error("relation entries must be homogeneous");
  return p.degree();
}

}  // namespace

GradedModulePresentation GradedModulePresentation::make(
    std::shared_ptr<const QuotientRing> ring, std::vector<int> gen_degrees,
    std::vector<std::vector<MultiPolynomial>> relation_columns) {
  for (int d : gen_degrees)
    if (d < 0) throw usage_error("generator degrees must be nonnegative");

  GradedModulePresentation M;
  M.ring = ring;
  M.gen_degrees = std::move(gen_degrees);

  std::vector<Relation> rels;
  for (auto& col : relation_columns) {
    if (col.size() != M.gen_degrees.size())
      throw usage_error("relation column length does not match generators");
    Relation rel;
    rel.entries.reserve(col.size());
    int degree = -1;
    for (size_t r = 0; r < col.size(); ++r) {
      MultiPolynomial e = ring->reduce(col[r]);
      int ed = entry_degree(e);
      if (ed >= 0) {
        int total = ed + M.gen_degrees[r];
        if (degree >= 0 && degree != total)
          throw usage_error("relation column mixes degrees");
        degree = total;
      }
      rel.entries.push_back(std::move(e));
    }
    if (degree < 0) continue;  // zero column
    rel.degree = degree;
    rels.push_back(std::move(rel));
  }

  // Eliminate invertible entries so that the free cover is minimal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < rels.size() && !changed; ++c) {
      for (size_t r = 0; r < M.gen_degrees.size() && !changed; ++r) {
        const MultiPolynomial& e = rels[c].entries[r];
        if (e.is_zero() || e.degree() != 0) continue;
        const Field& k = ring->field();
        Rat pivot_inv = k.inv(e.terms.front().second);
        Relation pivot_col = rels[c];
        rels.erase(rels.begin() + c);
        for (auto& other : rels) {
          MultiPolynomial coef = other.entries[r];
          if (coef.is_zero()) continue;
          for (size_t rr = 0; rr < other.entries.size(); ++rr) {
            if (rr == r) continue;
            MultiPolynomial adjust = ring->reduce(
                pivot_col.entries[rr].times(coef, k).scaled(pivot_inv, k));
            other.entries[rr] = other.entries[rr].minus(adjust, k);
          }
          other.entries[r] = MultiPolynomial::zero();
        }
        M.gen_degrees.erase(M.gen_degrees.begin() + r);
        for (auto& other : rels) other.entries.erase(other.entries.begin() + r);
        std::erase_if(rels, [](const Relation& rel) {
          return std::all_of(
              rel.entries.begin(), rel.entries.end(),
              [](const MultiPolynomial& p) { return p.is_zero(); });
        });
        changed = true;
      }
    }
  }

  M.relations = std::move(rels);
  return M;
}

GradedModulePresentation GradedModulePresentation::residue_field(
    std::shared_ptr<const QuotientRing> ring) {
  std::vector<MultiPolynomial> vars;
  for (size_t v = 0; v < ring->nvars(); ++v) {
    Monomial m(ring->nvars());
    m.exp[v] = 1;
    vars.push_back(make_monomial_poly(m, Rat(1)));
  }
  return cyclic(ring, vars);
}

GradedModulePresentation GradedModulePresentation::cyclic(
    std::shared_ptr<const QuotientRing> ring,
    const std::vector<MultiPolynomial>& elements) {
  std::vector<std::vector<MultiPolynomial>> cols;
  for (const auto& e : elements) cols.push_back({e});
  return make(ring, {0}, std::move(cols));
}

int GradedModulePresentation::max_relation_degree() const {
  int d = 0;
  for (const auto& rel : relations) d = std::max(d, rel.degree);
  return d;
}

SliceLayout slice_layout(const QuotientRing& ring,
                         const std::vector<int>& gen_degrees, int j) {
  SliceLayout lay;
  lay.offsets.reserve(gen_degrees.size());
  for (int dg : gen_degrees) {
    lay.offsets.push_back(lay.total);
    int d = j - dg;
    lay.total += d < 0 ? 0 : ring.dim(d);
  }
  return lay;
}

Matrix complex_slice(const GradedComplex& c, size_t i, int j) {
  const QuotientRing& R = *c.ring;
  const auto& src_deg = c.degrees[i];
  const auto& dst_deg = c.degrees[i - 1];
  SliceLayout src = slice_layout(R, src_deg, j);
  SliceLayout dst = slice_layout(R, dst_deg, j);
  Matrix m(dst.total, src.total);
  const Field& k = R.field();
  for (size_t g = 0; g < src_deg.size(); ++g) {
    int d = j - src_deg[g];
    if (d < 0) continue;
    const auto& mons = R.monomials(d);
    for (size_t t = 0; t < mons.size(); ++t) {
      size_t col = src.offsets[g] + t;
      for (size_t r = 0; r < dst_deg.size(); ++r) {
        const MultiPolynomial& entry = c.diffs[i][g][r];
        if (entry.is_zero()) continue;
        MultiPolynomial img = R.reduce(entry.times_monomial(mons[t], k));
        int dd = j - dst_deg[r];
        for (const auto& [mono, coef] : img.terms)
          m.at(dst.offsets[r] + R.index(dd, mono), col) = coef;
      }
    }
  }
  return m;
}

bool complex_squares_to_zero(const GradedComplex& c, int max_internal_degree) {
  const Field& k = c.ring->field();
  for (size_t i = 2; i < c.diffs.size(); ++i) {
    for (size_t g = 0; g < c.diffs[i].size(); ++g) {
      if (c.degrees[i][g] > max_internal_degree) continue;
      for (size_t rr = 0; rr < c.degrees[i - 2].size(); ++rr) {
        MultiPolynomial acc;
        for (size_t r = 0; r < c.degrees[i - 1].size(); ++r) {
          const MultiPolynomial& a = c.diffs[i][g][r];
          const MultiPolynomial& b = c.diffs[i - 1][r][rr];
          if (a.is_zero() || b.is_zero()) continue;
          acc = acc.plus(a.times(b, k), k);
        }
        if (acc.is_zero()) continue;
        if (!c.ring->reduce(acc).is_zero()) return false;
      }
    }
  }
  return true;
}

GradedComplex linear_part(const GradedComplex& c) {
  GradedComplex lin = c;
  for (size_t i = 1; i < lin.diffs.size(); ++i)
    for (auto& col : lin.diffs[i])
      for (auto& entry : col)
        if (!entry.is_zero() && entry.degree() != 1)
          entry = MultiPolynomial::zero();
  return lin;
}

Int BettiTable::beta(int i, int j) const {
  auto it = cells.find({i, j});
  return it == cells.end() ? Int(0) : it->second;
}

std::optional<int> BettiTable::row_max(int i) const {
  std::optional<int> best;
  for (const auto& [cell, value] : cells)
    if (cell.first == i && value != 0)
      best = best ? std::max(*best, cell.second) : cell.second;
  return best;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "betti table (rows i = homological, cols j = internal)";
  if (aborted) os << " [partial]";
  os << "\n";
  for (int i = 0; i <= h; ++i) {
    os << "  i=" << i << ":";
    bool any = false;
    for (int j = 0; j <= D; ++j) {
      Int b = beta(i, j);
      if (b == 0) continue;
      os << "  (" << j << ")->" << to_string(b);
      any = true;
    }
    if (!any) os << "  -";
    os << "\n";
  }
  return os.str();
}

namespace {

// Multiplies a coordinate vector of the degree-(j-1) slice of a free module
// by the v-th variable, landing in the degree-j slice.
Vec shift_by_variable(const QuotientRing& R, const std::vector<int>& degrees,
                      int j, size_t v, const Vec& z, const SliceLayout& src,
                      const SliceLayout& dst) {
  Vec out(dst.total, Rat(0));
  const Field& k = R.field();
  for (size_t g = 0; g < degrees.size(); ++g) {
    int d = j - 1 - degrees[g];
    if (d < 0) continue;
    const Matrix& mul = R.variable_map(v, d);
    for (size_t c = 0; c < mul.cols; ++c) {
      const Rat& x = z[src.offsets[g] + c];
      if (x == 0) continue;
      for (size_t r = 0; r < mul.rows; ++r) {
        const Rat& m = mul.at(r, c);
        if (m == 0) continue;
        out[dst.offsets[g] + r] = k.add(out[dst.offsets[g] + r], k.mul(m, x));
      }
    }
  }
  return out;
}

std::vector<MultiPolynomial> column_from_vector(const QuotientRing& R,
                                                const std::vector<int>& degrees,
                                                int j, const Vec& z,
                                                const SliceLayout& lay) {
  std::vector<MultiPolynomial> col;
  col.reserve(degrees.size());
  for (size_t g = 0; g < degrees.size(); ++g) {
    int d = j - degrees[g];
    if (d < 0) {
      col.push_back(MultiPolynomial::zero());
      continue;
    }
    Vec block(z.begin() + lay.offsets[g],
              z.begin() + lay.offsets[g] + static_cast<long>(R.dim(d)));
    col.push_back(R.from_coordinates(block, d));
  }
  return col;
}

}  // namespace

int default_internal_bound(const GradedModulePresentation& M, int h) {
  return h + M.max_relation_degree() + 2;
}

std::pair<ResolutionTruncation, BettiTable> minimal_resolution(
    const GradedModulePresentation& M, int h, int D,
    const CellObserver& observer) {
  if (h < 1) throw usage_error("homological bound must be at least 1");
  if (D < 0) throw usage_error("internal-degree bound must be nonnegative");
  const QuotientRing& R = *M.ring;
  if (R.certified_degree() < D)
    throw bound_error("ring slices certified only to degree " +
                      std::to_string(R.certified_degree()) + ", requested " +
                      std::to_string(D));

  ResolutionTruncation res;
  res.h = h;
  res.D = D;
  res.module_hf.assign(D + 1, Int(0));
  res.complex.ring = M.ring;
  res.complex.degrees.assign(h + 1, {});
  res.complex.diffs.assign(h + 1, {});
  res.complex.degrees[0] = M.gen_degrees;

  BettiTable table;
  table.h = h;
  table.D = D;

  bool stop = false;
  auto report = [&](int i, int j, long count) {
    if (count == 0 || stop) return;
    Int& cell = table.cells[{i, j}];
    cell += count;
    if (observer && !observer(i, j, cell)) stop = true;
  };

  for (int j = 0; j <= D && !stop; ++j)
    report(0, j, std::count(M.gen_degrees.begin(), M.gen_degrees.end(), j));

  // spans[0] holds a basis of the degree-(j-1) slice of the relation
  // submodule; spans[i] (i >= 1) one of ker(d_i) in degree j-1. In a
  // standard graded ring the degree-j slice of m*N is exactly R_1 * N_{j-1},
  // so candidates that stay independent from those products are minimal
  // generators of N by the graded Nakayama argument.
  std::vector<std::vector<Vec>> spans(h);
  size_t nv = R.nvars();

  for (int j = 0; j <= D && !stop; ++j) {
    std::vector<std::vector<Vec>> next_spans(h);
    for (int i = 0; i < h && !stop; ++i) {
      const auto& src_degrees = res.complex.degrees[i];
      SliceLayout lay = slice_layout(R, src_degrees, j);
      SliceLayout prev_lay = slice_layout(R, src_degrees, j - 1);

      Span reach(lay.total, R.field());
      std::vector<Vec> image_basis;  // maintained for i == 0 only
      for (const Vec& z : spans[i])
        for (size_t v = 0; v < nv; ++v) {
          Vec w = shift_by_variable(R, src_degrees, j, v, z, prev_lay, lay);
          if (reach.insert(w) && i == 0) image_basis.push_back(std::move(w));
        }

      std::vector<Vec> candidates;
      if (i == 0) {
        for (const auto& rel : M.relations) {
          if (rel.degree != j) continue;
          Vec vec(lay.total, Rat(0));
          for (size_t r = 0; r < src_degrees.size(); ++r) {
            int d = j - src_degrees[r];
            if (d < 0 || rel.entries[r].is_zero()) continue;
            Vec block = R.coordinates(rel.entries[r], d);
            std::copy(block.begin(), block.end(), vec.begin() + lay.offsets[r]);
          }
          candidates.push_back(std::move(vec));
        }
      } else {
        candidates = nullspace(complex_slice(res.complex, i, j), R.field());
      }

      long fresh = 0;
      for (const Vec& z : candidates) {
        if (!reach.insert(z)) continue;
        ++fresh;
        res.complex.degrees[i + 1].push_back(j);
        res.complex.diffs[i + 1].push_back(
            column_from_vector(R, src_degrees, j, z, lay));
        if (i == 0) image_basis.push_back(z);
      }
      // Columns of the next differential were sized for the generator list
      // of this module as it stood when they were created. A syzygy found in
      // degree j' has zero entries on every generator born after it, so the
      // old columns extend by zeros.
      if (fresh > 0 && static_cast<size_t>(i) + 2 < res.complex.diffs.size())
        for (auto& col : res.complex.diffs[i + 2])
          col.resize(res.complex.degrees[i + 1].size());

      if (i == 0) {
        res.module_hf[j] = Int(static_cast<long>(lay.total)) -
                           Int(static_cast<long>(reach.size()));
        next_spans[0] = std::move(image_basis);
      } else {
        // The full nullspace basis spans the kernel slice.
        next_spans[i] = std::move(candidates);
      }
      report(i + 1, j, fresh);
    }
    spans = std::move(next_spans);
  }

  res.aborted = table.aborted = stop;
  return {std::move(res), std::move(table)};
}

void verify_resolution(const ResolutionTruncation& res) {
  const QuotientRing& R = *res.complex.ring;
  for (size_t i = 1; i < res.complex.diffs.size(); ++i) {
    for (size_t g = 0; g < res.complex.diffs[i].size(); ++g) {
      int dg = res.complex.degrees[i][g];
      for (size_t r = 0; r < res.complex.degrees[i - 1].size(); ++r) {
        const MultiPolynomial& e = res.complex.diffs[i][g][r];
        if (e.is_zero()) continue;
        if (!e.is_homogeneous())
          throw internal_error("differential entry is not homogeneous");
        int expected = dg - res.complex.degrees[i - 1][r];
        if (e.degree() != expected)
          throw internal_error("differential entry has the wrong degree");
        if (expected < 1)
          throw internal_error("differential has an invertible entry");
        if (!R.reduce(e).equals(e))
          throw internal_error("differential entry is not in normal form");
      }
    }
  }
  if (!complex_squares_to_zero(res.complex, res.D))
    throw internal_error("differential does not square to zero");
}

}  // namespace koszul
