#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sgtc/exact/scalar.hpp"

namespace sgtc::exact {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  // Single 1 at (i, j).
  static Matrix elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  // Row-major flattening.
  const Vector& data() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace sgtc::exact
