#include "sgtc/superlie/structure.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlie {

std::vector<Matrix> full_odd_block(std::size_t p, std::size_t q) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < p; ++b) out.push_back(Matrix::elementary(q, p, a, b));
  return out;
}

std::size_t spin_generator_count(const clifford::SpinorModule& module) { return module.generators.size(); }

EmbeddedAlgebra build_structure_algebra(const clifford::SpinorModule& module, const std::vector<Matrix>& S,
                                        const InternalSymmetry& K) {
  const std::size_t p = module.clifford.p(), q = module.dim, n = p + q;
  const auto W = SuperVectorSpace::standard(p, q);
  const clifford::SpinRepPair spin = clifford::spin_generators(module.clifford);
  if (K.action.size() != K.labels.size()) throw DimensionError("internal symmetry labels and matrices differ");

  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < spin.size(); ++k) {
    Matrix m(n, n);
    m.set_block(0, 0, spin.vector[k]);
    m.set_block(p, p, module.generators[k]);
    basis.push_back(std::move(m));
    labels.push_back(spin.label(k));
  }
  for (std::size_t k = 0; k < K.action.size(); ++k) {
    if (K.action[k].rows() != q || K.action[k].cols() != q) throw DimensionError("internal symmetry must act on R^q");
    Matrix m(n, n);
    m.set_block(p, p, K.action[k]);
    basis.push_back(std::move(m));
    labels.push_back(K.labels[k]);
  }
  const std::size_t n_even = basis.size();

  std::vector<exact::SparseVector> s_flat;
  for (const auto& s : S) {
    if (s.rows() != q || s.cols() != p) throw DimensionError("S elements must be " + std::to_string(q) + "x" + std::to_string(p));
    s_flat.push_back(exact::to_sparse(s.data()));
  }
  const exact::Subspace s_span = exact::Subspace::span(q * p, s_flat);
  if (s_span.dim() != S.size()) throw ValidationError("S basis is linearly dependent");
  // [diag(A, B), L] = B L - L A on the lower-left block
  for (std::size_t k = 0; k < n_even; ++k) {
    const Matrix A = basis[k].block(0, 0, p, p), B = basis[k].block(p, p, q, q);
    for (std::size_t j = 0; j < S.size(); ++j)
      if (!s_span.contains(exact::to_sparse((B * S[j] - S[j] * A).data())))
        throw InvarianceError("S is not invariant under " + labels[k] + " (moves S" + std::to_string(j + 1) + ")",
                              labels[k]);
  }
  for (std::size_t j = 0; j < S.size(); ++j) {
    Matrix m(n, n);
    m.set_block(p, 0, S[j]);
    basis.push_back(std::move(m));
    labels.push_back("S" + std::to_string(j + 1));
  }
  return EmbeddedAlgebra::from_matrices(W, std::move(basis), std::move(labels));
}

EmbeddedAlgebra build_structure_algebra(const clifford::CliffordData& cd, const std::vector<Matrix>& S) {
  return build_structure_algebra(clifford::full_module(cd), S);
}

}  // namespace sgtc::superlie
