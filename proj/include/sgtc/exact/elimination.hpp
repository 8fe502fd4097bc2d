#pragma once

#include <cstddef>
#include <vector>

#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/sparse.hpp"

namespace sgtc::exact {

// Row echelon data for a set of vectors of length `cols`. Every stored row is
// normalized to a leading 1 at its pivot; pivots are strictly increasing.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
  bool reduced = false;

  std::size_t rank() const { return rows.size(); }
};

enum class Reduction { Echelon, Reduced };

// Sparse exact Gaussian elimination. Pivot columns are taken in increasing
// order; among the rows leading in that column the shortest is used (ties by
// position). Row updates for one pivot are independent and run under OpenMP.
//
// The reduced form is unique, so any result built from it (kernel bases,
// canonical subspace bases) does not depend on the pivot row choice.
Echelon row_reduce(std::vector<SparseVector> rows, std::size_t cols,
                   Reduction mode = Reduction::Reduced);

// Reduce v against a reduced echelon form; the result has zeros at every pivot.
SparseVector reduce_against(const Echelon& e, SparseVector v);

std::size_t rank(const Matrix& m);
// Splits the matrix into connected row/column blocks before eliminating.
std::size_t rank(const SparseMatrix& m);

// Textbook dense Gauss-Jordan, serial. Kept as the reference the sparse
// kernel is tested and benchmarked against.
namespace reference {
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel(const Matrix& m);
}  // namespace reference

// Number of OpenMP threads the kernels may use (1 when built without OpenMP).
void set_max_threads(int n);
int max_threads();

}  // namespace sgtc::exact
