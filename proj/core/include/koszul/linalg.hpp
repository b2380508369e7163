#pragma once

#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using Vec = std::vector<Rat>;

// Dense row-major matrix over the coefficient field.
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

size_t rank(Matrix m, const Field& f);

// Basis of the right kernel, deterministic: free columns in ascending order,
// each normalized with a 1 in its free position.
std::vector<Vec> nullspace(const Matrix& m, const Field& f);

// Incremental row space with reduced echelon bookkeeping; used to split
// minimal generators off a spanning set.
struct Span {
  explicit Span(size_t dim, const Field& f) : dim_(dim), field_(f) {}

  size_t size() const { return rows_.size(); }
  bool contains(const Vec& v) const;
  // Returns true and absorbs the vector when it enlarges the span.
  bool insert(const Vec& v);

 private:
  Vec reduce(Vec v) const;
  size_t dim_;
  Field field_;
  std::vector<Vec> rows_;     // reduced echelon rows
  std::vector<size_t> pivots_;
};

}  // namespace koszul
