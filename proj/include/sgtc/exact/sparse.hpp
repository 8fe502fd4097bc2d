#pragma once

#include <cstddef>
#include <vector>

#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/scalar.hpp"

namespace sgtc::exact {

struct SparseEntry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const SparseEntry& a, const SparseEntry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

// Entries sorted by strictly increasing index, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
Scalar entry(const SparseVector& v, std::size_t index);

// r <- r + factor * x
void axpy(SparseVector& r, const Scalar& factor, const SparseVector& x);
void scale(SparseVector& r, const Scalar& factor);

// Column-major sparse matrix; the natural layout for linear maps built basis-image by basis-image.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  SparseVector& column(std::size_t j) { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }

  std::vector<SparseVector> row_vectors() const;
  SparseMatrix transpose() const;
  Matrix to_dense() const;
  std::size_t nonzeros() const;

  SparseVector apply(const SparseVector& x) const;
  Vector apply(const Vector& x) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

// Accumulates (row, col, value) triplets; duplicates are summed on build().
class SparseBuilder {
 public:
  SparseBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t row, std::size_t col, const Scalar& value);
  SparseMatrix build() const;

 private:
  struct Triplet {
    std::size_t row, col;
    Scalar value;
  };
  std::size_t rows_, cols_;
  std::vector<Triplet> triplets_;
};

}  // namespace sgtc::exact
