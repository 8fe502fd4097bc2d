#include "sgtc/exact/sparse.hpp"

#include <algorithm>

#include "sgtc/error.hpp"

namespace sgtc::exact {

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.push_back({i, v[i]});
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector d(n);
  for (const auto& e : v) {
    if (e.index >= n) throw DimensionError("sparse index out of range");
    d[e.index] = e.value;
  }
  return d;
}

Scalar entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Scalar(0);
}

void axpy(SparseVector& r, const Scalar& factor, const SparseVector& x) {
  if (sgn(factor) == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(r.size() + x.size());
  auto a = r.begin();
  auto b = x.begin();
  while (a != r.end() || b != x.end()) {
    if (b == x.end() || (a != r.end() && a->index < b->index)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == r.end() || b->index < a->index) {
      out.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Scalar v = a->value + factor * b->value;
      if (sgn(v) != 0) out.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  r = std::move(out);
}

void scale(SparseVector& r, const Scalar& factor) {
  if (sgn(factor) == 0) {
    r.clear();
    return;
  }
  for (auto& e : r) e.value *= factor;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) s.columns_[j].push_back({i, m(i, j)});
  return s;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  SparseMatrix s;
  s.rows_ = rows;
  for (const auto& c : columns)
    if (!c.empty() && c.back().index >= rows) throw DimensionError("sparse column index out of range");
  s.columns_ = std::move(columns);
  return s;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& e : columns_[j]) rows[e.index].push_back({j, e.value});
  return rows;
}

SparseMatrix SparseMatrix::transpose() const { return from_columns(cols(), row_vectors()); }

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& e : columns_[j]) m(e.index, j) = e.value;
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& e : x) {
    if (e.index >= cols()) throw DimensionError("sparse apply: index out of range");
    axpy(out, e.value, columns_[e.index]);
  }
  return out;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols()) throw DimensionError("sparse apply: length mismatch");
  return exact::to_dense(apply(to_sparse(x)), rows_);
}

void SparseBuilder::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= rows_ || col >= cols_) throw DimensionError("SparseBuilder: index out of range");
  if (sgn(value) != 0) triplets_.push_back({row, col, value});
}

SparseMatrix SparseBuilder::build() const {
  std::vector<std::size_t> order(triplets_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = triplets_[a];
    const auto& y = triplets_[b];
    return x.col != y.col ? x.col < y.col : (x.row != y.row ? x.row < y.row : a < b);
  });
  std::vector<SparseVector> cols(cols_);
  for (std::size_t k : order) {
    const auto& t = triplets_[k];
    auto& c = cols[t.col];
    if (!c.empty() && c.back().index == t.row) {
      c.back().value += t.value;
      if (sgn(c.back().value) == 0) c.pop_back();
    } else {
      c.push_back({t.row, t.value});
    }
  }
  return SparseMatrix::from_columns(rows_, std::move(cols));
}

}  // namespace sgtc::exact
