#include <random>

#include "doctest.h"
#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/exact/subspace.hpp"

using namespace sgtc::exact;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<int> val(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) < density_pct) {
        m(i, j) = Scalar(val(rng), 1 + (pct(rng) % 3));
        m(i, j).canonicalize();
      }
  return m;
}

}  // namespace

TEST_CASE("parse_scalar canonicalizes and rejects junk") {
  CHECK(parse_scalar(" 2/6 ") == Scalar(1, 3));
  CHECK(parse_scalar("-3/4") == Scalar(-3, 4));
  CHECK(to_string(parse_scalar("4/2")) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("matrix arithmetic") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {4, 3}});
  CHECK(commutator(a, b) == Matrix{{-1, -3}, {3, 1}});
  CHECK(kron(Matrix::identity(2), b).rows() == 4);
  CHECK(a.trace() == 5);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK_THROWS_AS(a * Matrix(3, 3), sgtc::DimensionError);
}

TEST_CASE("sparse axpy cancels exactly") {
  SparseVector r{{0, Scalar(1)}, {3, Scalar(2)}};
  axpy(r, Scalar(-2), SparseVector{{3, Scalar(1)}, {5, Scalar(1)}});
  CHECK(r == SparseVector{{0, Scalar(1)}, {5, Scalar(-2)}});
}

TEST_CASE("sparse elimination agrees with dense reference") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 9, c = 1 + (trial * 7) % 11;
    Matrix m = random_matrix(rng, r, c, 20 + trial % 60);
    if (trial % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    std::vector<std::size_t> piv;
    const Matrix ref = reference::rref(m, &piv);
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(to_sparse(m.row(i)));
    const Echelon e = row_reduce(rows, c);
    REQUIRE(e.pivots == piv);
    for (std::size_t k = 0; k < piv.size(); ++k) CHECK(to_dense(e.rows[k], c) == ref.row(k));
    CHECK(rank(m) == piv.size());
    CHECK(rank(SparseMatrix::from_dense(m)) == piv.size());
    CHECK(kernel_basis(m).dim() == c - piv.size());
    CHECK(kernel_basis(m) == Subspace::span(c, reference::kernel(m)));
  }
}

TEST_CASE("rank of block-diagonal sparse matrix sums over components") {
  const Matrix a{{1, 2}, {2, 4}};
  const Matrix b{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  CHECK(rank(SparseMatrix::from_dense(direct_sum(a, b))) == 3);
}

TEST_CASE("subspace basis is canonical") {
  const Subspace u = Subspace::span(3, std::vector<Vector>{{1, 1, 0}, {0, 1, 1}});
  const Subspace v = Subspace::span(3, std::vector<Vector>{{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(u == v);
  CHECK(u.dim() == 2);
  CHECK(u.contains(Vector{3, 4, 1}));
  CHECK_FALSE(u.contains(Vector{0, 0, 1}));
  CHECK(u.pivots() == std::vector<std::size_t>{0, 1});
  auto c = u.coordinates(Vector{3, 4, 1});
  REQUIRE(c);
  CHECK(*c == Vector{3, 4});
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6;
    const Subspace a = Subspace::column_span(random_matrix(rng, n, 1 + trial % 4, 40));
    const Subspace b = Subspace::column_span(random_matrix(rng, n, 1 + (trial / 4) % 4, 40));
    const Subspace s = a.sum(b), i = a.intersection(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
  }
}

TEST_CASE("quotient picks the lexicographically first complement") {
  const Subspace u = Subspace::span(3, std::vector<Vector>{{1, 1, 0}});
  const QuotientMap q(u);
  CHECK(q.complement() == std::vector<std::size_t>{0, 2});
  CHECK(q.project(Vector{0, 1, 0}) == Vector{-1, 0});
  CHECK(q.project(Vector{1, 1, 0}) == Vector{0, 0});
  const Matrix m = q.matrix();
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
}

TEST_CASE("linear solver recovers coefficients") {
  const std::vector<SparseVector> basis{to_sparse(Vector{1, 1, 0}), to_sparse(Vector{0, 1, 1})};
  const LinearSolver s(3, basis);
  auto c = s.solve(Vector{2, 5, 3});
  REQUIRE(c);
  CHECK(*c == Vector{2, 3});
  CHECK_FALSE(s.solve(Vector{1, 0, 0}));
  CHECK_THROWS_AS(LinearSolver(3, {basis[0], basis[0]}), sgtc::DimensionError);
}
