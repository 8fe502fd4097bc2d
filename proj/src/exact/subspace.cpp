#include "sgtc/exact/subspace.hpp"

#include <algorithm>

#include "sgtc/error.hpp"

namespace sgtc::exact {

namespace {

void check_ambient(const SparseVector& v, std::size_t n) {
  if (!v.empty() && v.back().index >= n) throw DimensionError("vector exceeds ambient dimension");
}

SparseVector reversed(const SparseVector& v, std::size_t n) {
  SparseVector r;
  r.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) r.push_back({n - 1 - it->index, it->value});
  return r;
}

std::vector<SparseVector> sparse_columns(const Matrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = to_sparse(m.column(j));
  return cols;
}

std::vector<SparseVector> kernel_vectors(std::vector<SparseVector> rows, std::size_t cols) {
  const Echelon e = row_reduce(std::move(rows), cols, Reduction::Reduced);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<SparseVector> kern(cols);
  for (std::size_t k = 0; k < e.rows.size(); ++k)
    for (const auto& entry : e.rows[k])
      if (!is_pivot[entry.index]) kern[entry.index].push_back({e.pivots[k], -entry.value});
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = std::move(kern[f]);
    v.push_back({f, Scalar(1)});
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) {
  echelon_.cols = ambient_dim;
  echelon_.reduced = true;
}

Subspace Subspace::span(std::size_t ambient_dim, std::vector<SparseVector> generators) {
  for (const auto& g : generators) check_ambient(g, ambient_dim);
  return Subspace(row_reduce(std::move(generators), ambient_dim, Reduction::Reduced));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  std::vector<SparseVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw DimensionError("generator length mismatch");
    gens.push_back(to_sparse(g));
  }
  return span(ambient_dim, std::move(gens));
}

Subspace Subspace::column_span(const Matrix& m) { return span(m.rows(), sparse_columns(m)); }

Subspace Subspace::column_span(const SparseMatrix& m) { return span(m.rows(), m.columns()); }

Subspace Subspace::whole(std::size_t ambient_dim) {
  Echelon e;
  e.cols = ambient_dim;
  e.reduced = true;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    e.rows.push_back({{i, Scalar(1)}});
    e.pivots.push_back(i);
  }
  return Subspace(std::move(e));
}

Matrix Subspace::basis() const {
  Matrix b(ambient_dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& e : echelon_.rows[k]) b(e.index, k) = e.value;
  return b;
}

SparseVector Subspace::reduce(SparseVector v) const {
  check_ambient(v, ambient_dim());
  return reduce_against(echelon_, std::move(v));
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector length mismatch");
  return contains(to_sparse(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("subspace ambient mismatch");
  return std::all_of(other.basis_vectors().begin(), other.basis_vectors().end(),
                     [&](const SparseVector& v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = entry(v, echelon_.pivots[k]);
  return c;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector length mismatch");
  return coordinates(to_sparse(v));
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("subspace ambient mismatch");
  std::vector<SparseVector> gens = echelon_.rows;
  gens.insert(gens.end(), other.echelon_.rows.begin(), other.echelon_.rows.end());
  return span(ambient_dim(), std::move(gens));
}

Subspace Subspace::intersection(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("subspace ambient mismatch");
  // Zassenhaus: rows (a | a) and (b | 0); rows with empty left half span the intersection.
  const std::size_t n = ambient_dim();
  std::vector<SparseVector> rows;
  for (const auto& a : echelon_.rows) {
    SparseVector r = a;
    for (const auto& e : a) r.push_back({n + e.index, e.value});
    rows.push_back(std::move(r));
  }
  for (const auto& b : other.echelon_.rows) rows.push_back(b);
  const Echelon e = row_reduce(std::move(rows), 2 * n, Reduction::Echelon);
  std::vector<SparseVector> gens;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] < n) continue;
    SparseVector g;
    for (const auto& x : e.rows[k]) g.push_back({x.index - n, x.value});
    gens.push_back(std::move(g));
  }
  return span(n, std::move(gens));
}

Subspace kernel_basis(const Matrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = to_sparse(m.row(i));
  return Subspace::span(m.cols(), kernel_vectors(std::move(rows), m.cols()));
}

Subspace kernel_basis(const SparseMatrix& m) {
  return Subspace::span(m.cols(), kernel_vectors(m.row_vectors(), m.cols()));
}

QuotientMap::QuotientMap(const Subspace& sub) : ambient_(sub.ambient_dim()) {
  std::vector<SparseVector> rows;
  rows.reserve(sub.dim());
  for (const auto& b : sub.basis_vectors()) rows.push_back(reversed(b, ambient_));
  reversed_ = row_reduce(std::move(rows), ambient_, Reduction::Reduced);
  std::vector<bool> trailing(ambient_, false);
  for (std::size_t p : reversed_.pivots) trailing[ambient_ - 1 - p] = true;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!trailing[i]) complement_.push_back(i);
}

Vector QuotientMap::project(const SparseVector& v) const {
  check_ambient(v, ambient_);
  const SparseVector r = reversed(reduce_against(reversed_, reversed(v, ambient_)), ambient_);
  Vector out(complement_.size());
  std::size_t k = 0;
  for (const auto& e : r) {
    while (complement_[k] < e.index) ++k;
    out[k] = e.value;
  }
  return out;
}

Vector QuotientMap::project(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length mismatch");
  return project(to_sparse(v));
}

Matrix QuotientMap::matrix() const {
  Matrix m(dim(), ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    const Vector p = project(SparseVector{{j, Scalar(1)}});
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = p[i];
  }
  return m;
}

LinearSolver::LinearSolver(std::size_t ambient_dim, const std::vector<SparseVector>& basis)
    : ambient_(ambient_dim), count_(basis.size()) {
  std::vector<SparseVector> rows;
  rows.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    check_ambient(basis[i], ambient_);
    SparseVector r = basis[i];
    r.push_back({ambient_ + i, Scalar(1)});
    rows.push_back(std::move(r));
  }
  augmented_ = row_reduce(std::move(rows), ambient_ + count_, Reduction::Reduced);
  for (std::size_t p : augmented_.pivots)
    if (p >= ambient_) throw DimensionError("LinearSolver: vectors are linearly dependent");
}

std::optional<Vector> LinearSolver::solve(const SparseVector& v) const {
  check_ambient(v, ambient_);
  const SparseVector r = reduce_against(augmented_, v);
  if (!r.empty() && r.front().index < ambient_) return std::nullopt;
  Vector c(count_);
  for (const auto& e : r) c[e.index - ambient_] = -e.value;
  return c;
}

std::optional<Vector> LinearSolver::solve(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length mismatch");
  return solve(to_sparse(v));
}

}  // namespace sgtc::exact
