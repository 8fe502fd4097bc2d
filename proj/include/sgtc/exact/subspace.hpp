#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgtc/exact/elimination.hpp"
#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/sparse.hpp"

namespace sgtc::exact {

// A linear subspace of Q^n. The stored basis is the reduced row echelon basis
// of the span, so two equal subspaces always carry identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, std::vector<SparseVector> generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace column_span(const Matrix& m);
  static Subspace column_span(const SparseMatrix& m);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return echelon_.cols; }
  std::size_t dim() const { return echelon_.rows.size(); }
  std::size_t quotient_dim() const { return ambient_dim() - dim(); }

  // ambient_dim x dim, one basis vector per column.
  Matrix basis() const;
  const std::vector<SparseVector>& basis_vectors() const { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }

  bool contains(const Vector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  // Coefficients of v in basis_vectors(); nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  std::optional<Vector> coordinates(const SparseVector& v) const;

  // Remainder of v after eliminating the pivot coordinates.
  SparseVector reduce(SparseVector v) const;

  // Throw DimensionError on ambient mismatch.
  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.echelon_.cols == b.echelon_.cols && a.echelon_.rows == b.echelon_.rows;
  }

 private:
  explicit Subspace(Echelon e) : echelon_(std::move(e)) {}
  Echelon echelon_;
};

// rank(M) (a.k.a. dim of the column space) and the kernel, as a Subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const SparseMatrix& m);

// Quotient Q^n / U with the complement spanned by the lexicographically first
// standard basis vectors that stay independent modulo U.
class QuotientMap {
 public:
  explicit QuotientMap(const Subspace& sub);

  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

  Vector project(const Vector& v) const;
  Vector project(const SparseVector& v) const;
  // dim x ambient_dim
  Matrix matrix() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> complement_;
  // Echelon of the subspace in reversed coordinates: pivots are trailing pivots.
  Echelon reversed_;
};

// Solves v = sum_i c_i b_i for a fixed list of independent vectors b_i.
class LinearSolver {
 public:
  LinearSolver() = default;
  // Throws DimensionError if the vectors are dependent.
  LinearSolver(std::size_t ambient_dim, const std::vector<SparseVector>& basis);

  std::size_t size() const { return count_; }
  std::optional<Vector> solve(const SparseVector& v) const;
  std::optional<Vector> solve(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t count_ = 0;
  // Reduced echelon of [b_i | e_i]; row k = R_k | E_k.
  Echelon augmented_;
};

}  // namespace sgtc::exact
