#include "sgtc/exact/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "sgtc/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgtc::exact {

namespace {

constexpr std::size_t kParallelThreshold = 16;
constexpr long kNoRow = -1;

// Eliminate every pivot column of v strictly after `after` using the echelon rows.
// Rows need not be reduced: subtracting row j only touches columns beyond p_j,
// so a single increasing sweep leaves all pivot entries zero.
void sweep(SparseVector& v, const std::vector<SparseVector>& rows, const std::vector<long>& row_of_col,
           std::size_t after, bool skip_first) {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t c = v[pos].index;
    if ((skip_first && c <= after) || row_of_col[c] == kNoRow) {
      ++pos;
      continue;
    }
    const Scalar f = -v[pos].value;
    axpy(v, f, rows[static_cast<std::size_t>(row_of_col[c])]);
    // v[pos] is gone; entries before pos are unchanged.
  }
}

void normalize(SparseVector& v) {
  if (v.empty() || v.front().value == 1) return;
  const Scalar inv = 1 / v.front().value;
  for (auto& e : v) e.value *= inv;
}

}  // namespace

Echelon row_reduce(std::vector<SparseVector> rows, std::size_t cols, Reduction mode) {
  Echelon out;
  out.cols = cols;

  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    if (rows[i].back().index >= cols) throw DimensionError("row_reduce: index out of range");
    bucket[rows[i].front().index].push_back(i);
  }

  for (std::size_t c = 0; c < cols; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < cand.size(); ++k) {
      const auto& a = rows[cand[k]];
      const auto& b = rows[cand[best]];
      if (a.size() < b.size() || (a.size() == b.size() && cand[k] < cand[best])) best = k;
    }
    const std::size_t pr = cand[best];
    normalize(rows[pr]);
    const SparseVector& pivot = rows[pr];

    std::vector<std::size_t> others;
    others.reserve(cand.size() - 1);
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (k != best) others.push_back(cand[k]);

    const long n = static_cast<long>(others.size());
#pragma omp parallel for schedule(dynamic) if (others.size() > kParallelThreshold)
    for (long k = 0; k < n; ++k) {
      SparseVector& r = rows[others[static_cast<std::size_t>(k)]];
      const Scalar f = -r.front().value;
      axpy(r, f, pivot);
    }
    for (std::size_t i : others)
      if (!rows[i].empty()) bucket[rows[i].front().index].push_back(i);

    out.pivots.push_back(c);
    out.rows.push_back(std::move(rows[pr]));
    std::vector<std::size_t>().swap(cand);
  }

  if (mode == Reduction::Reduced) {
    std::vector<long> row_of_col(cols, kNoRow);
    for (std::size_t k = 0; k < out.pivots.size(); ++k) row_of_col[out.pivots[k]] = static_cast<long>(k);
    const std::vector<SparseVector> echelon = out.rows;
    const long n = static_cast<long>(out.rows.size());
#pragma omp parallel for schedule(dynamic) if (out.rows.size() > kParallelThreshold)
    for (long k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      sweep(out.rows[i], echelon, row_of_col, out.pivots[i], true);
    }
    out.reduced = true;
  }
  return out;
}

SparseVector reduce_against(const Echelon& e, SparseVector v) {
  std::vector<long> row_of_col(e.cols, kNoRow);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) row_of_col[e.pivots[k]] = static_cast<long>(k);
  if (!v.empty() && v.back().index >= e.cols) throw DimensionError("reduce_against: index out of range");
  sweep(v, e.rows, row_of_col, 0, false);
  return v;
}

std::size_t rank(const Matrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = to_sparse(m.row(i));
  return row_reduce(std::move(rows), m.cols(), Reduction::Echelon).rank();
}

std::size_t rank(const SparseMatrix& m) {
  // Union-find over rows [0, R) and columns [R, R + C).
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < C; ++j)
    for (const auto& e : m.column(j)) {
      const std::size_t a = find(e.index);
      const std::size_t b = find(R + j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<SparseVector> rows = m.row_vectors();
  std::vector<std::vector<std::size_t>> groups(R + C);
  for (std::size_t i = 0; i < R; ++i)
    if (!rows[i].empty()) groups[find(i)].push_back(i);

  std::size_t total = 0;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() == 1) {
      ++total;
      continue;
    }
    std::vector<SparseVector> block;
    block.reserve(g.size());
    for (std::size_t i : g) block.push_back(std::move(rows[i]));
    total += row_reduce(std::move(block), C, Reduction::Echelon).rank();
  }
  return total;
}

namespace reference {

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace reference

void set_max_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : 1);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sgtc::exact
