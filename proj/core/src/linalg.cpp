#include "koszul/linalg.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Matrix& m, const Field& f) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && f.is_zero(m.at(p, col))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = f.inv(m.at(row, col));
    for (size_t c = col; c < m.cols; ++c)
      m.at(row, c) = f.mul(m.at(row, c), inv);
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      Rat factor = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(Matrix m, const Field& f) { return rref(m, f).size(); }

std::vector<Vec> nullspace(const Matrix& m, const Field& f) {
  Matrix e = m;
  std::vector<size_t> pivots = rref(e, f);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, Rat(0));
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = f.sub(Rat(0), e.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec Span::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[pivots_[k]];
    if (field_.is_zero(c)) continue;
    Rat factor = c;
    for (size_t i = 0; i < dim_; ++i)
      v[i] = field_.sub(v[i], field_.mul(factor, rows_[k][i]));
  }
  return v;
}

bool Span::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [&](const Rat& x) { return field_.is_zero(x); });
}

bool Span::insert(const Vec& v) {
  if (v.size() != dim_) throw internal_error("span dimension mismatch");
  Vec r = reduce(v);
  size_t pivot = dim_;
  for (size_t i = 0; i < dim_; ++i)
    if (!field_.is_zero(r[i])) {
      pivot = i;
      break;
    }
  if (pivot == dim_) return false;
  Rat inv = field_.inv(r[pivot]);
  for (size_t i = 0; i < dim_; ++i) r[i] = field_.mul(r[i], inv);
  // Keep earlier rows reduced against the new pivot.
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat c = rows_[k][pivot];
    if (field_.is_zero(c)) continue;
    for (size_t i = 0; i < dim_; ++i)
      rows_[k][i] = field_.sub(rows_[k][i], field_.mul(c, r[i]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace koszul
