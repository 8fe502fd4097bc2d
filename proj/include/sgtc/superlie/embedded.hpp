#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/subspace.hpp"
#include "sgtc/superlie/algebra.hpp"

namespace sgtc::superlie {

using exact::Matrix;

// Parity of X in gl(W): even if it preserves the grading, odd if it reverses
// it, nullopt when mixed. The zero matrix counts as even.
std::optional<Parity> matrix_parity(const SuperVectorSpace& W, const Matrix& X);
Matrix supercommutator(const Matrix& X, Parity px, const Matrix& Y, Parity py);

// A subalgebra of gl(W) given by a basis of homogeneous matrices.
class EmbeddedAlgebra {
 public:
  EmbeddedAlgebra() = default;
  // Throws ValidationError if a matrix is inhomogeneous, the basis is
  // dependent, or the span is not closed under the supercommutator.
  static EmbeddedAlgebra from_matrices(const SuperVectorSpace& W, std::vector<Matrix> basis,
                                       std::vector<std::string> labels = {});

  const SuperVectorSpace& W() const { return W_; }
  const SuperLieAlgebra& algebra() const { return algebra_; }
  const std::vector<Matrix>& matrices() const { return basis_; }
  const Matrix& matrix(std::size_t k) const { return basis_[k]; }
  std::size_t dim() const { return basis_.size(); }
  Parity parity(std::size_t k) const { return algebra_.parity(k); }
  const std::string& label(std::size_t k) const { return algebra_.carrier().label(k); }

  // Coordinates of X in the basis; nullopt when X is outside the span.
  std::optional<exact::Vector> coordinates(const Matrix& X) const;
  Matrix element(const exact::Vector& coords) const;

  // Brackets recomputed from the matrices agree with the structure constants.
  bool brackets_match_matrices() const;

 private:
  SuperVectorSpace W_;
  std::vector<Matrix> basis_;
  SuperLieAlgebra algebra_;
  exact::LinearSolver solver_;
};

}  // namespace sgtc::superlie
