#include "sgtc/superlie/embedded.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlie {

using exact::Vector;
using superlin::koszul;

std::optional<Parity> matrix_parity(const SuperVectorSpace& W, const Matrix& X) {
  if (X.rows() != W.dim() || X.cols() != W.dim()) throw DimensionError("matrix does not act on W");
  bool even = false, odd = false;
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < X.cols(); ++j) {
      if (sgn(X(i, j)) == 0) continue;
      (W.parity(i) == W.parity(j) ? even : odd) = true;
    }
  if (even && odd) return std::nullopt;
  return odd ? Parity::Odd : Parity::Even;
}

Matrix supercommutator(const Matrix& X, Parity px, const Matrix& Y, Parity py) {
  Matrix r = X * Y;
  const Matrix yx = Y * X;
  if (koszul(px, py) == 1) r -= yx;
  else r += yx;
  return r;
}

EmbeddedAlgebra EmbeddedAlgebra::from_matrices(const SuperVectorSpace& W, std::vector<Matrix> basis,
                                               std::vector<std::string> labels) {
  EmbeddedAlgebra e;
  e.W_ = W;
  if (labels.empty())
    for (std::size_t k = 0; k < basis.size(); ++k) labels.push_back("x" + std::to_string(k + 1));
  if (labels.size() != basis.size()) throw DimensionError("label count differs from basis size");
  std::vector<Parity> parities;
  std::vector<exact::SparseVector> flat;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto p = matrix_parity(W, basis[k]);
    if (!p) throw ValidationError("basis matrix " + labels[k] + " is not homogeneous");
    parities.push_back(*p);
    flat.push_back(exact::to_sparse(basis[k].data()));
  }
  try {
    e.solver_ = exact::LinearSolver(W.dim() * W.dim(), flat);
  } catch (const DimensionError&) {
    throw ValidationError("basis matrices are linearly dependent");
  }
  e.basis_ = std::move(basis);
  e.algebra_ = SuperLieAlgebra(SuperVectorSpace(std::move(labels), std::move(parities)));
  for (std::size_t a = 0; a < e.dim(); ++a)
    for (std::size_t b = 0; b < e.dim(); ++b) {
      const Matrix br = supercommutator(e.basis_[a], e.parity(a), e.basis_[b], e.parity(b));
      const auto c = e.solver_.solve(exact::to_sparse(br.data()));
      if (!c)
        throw ValidationError("span is not closed: [" + e.label(a) + ", " + e.label(b) + "] leaves the subalgebra");
      e.algebra_.set_bracket(a, b, exact::to_sparse(*c));
    }
  return e;
}

std::optional<Vector> EmbeddedAlgebra::coordinates(const Matrix& X) const {
  if (X.rows() != W_.dim() || X.cols() != W_.dim()) throw DimensionError("matrix does not act on W");
  return solver_.solve(exact::to_sparse(X.data()));
}

Matrix EmbeddedAlgebra::element(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionError("coordinate length mismatch");
  Matrix m(W_.dim(), W_.dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(coords[k]) != 0) m += coords[k] * basis_[k];
  return m;
}

bool EmbeddedAlgebra::brackets_match_matrices() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) {
      Matrix rebuilt(W_.dim(), W_.dim());
      for (const auto& e : algebra_.bracket(a, b)) rebuilt += e.value * basis_[e.index];
      if (!(rebuilt == supercommutator(basis_[a], parity(a), basis_[b], parity(b)))) return false;
    }
  return true;
}

}  // namespace sgtc::superlie
