#include "sgtc/spencer/complex.hpp"

#include "sgtc/error.hpp"

namespace sgtc::spencer {

using exact::Vector;

SpencerComplexData spencer_delta(const EmbeddedAlgebra& g) {
  const SuperVectorSpace& W = g.W();
  const ProlongationTower tower(g, 0);
  SpencerComplexData d{
      g,
      HomSpace(W, g.algebra().carrier()),
      HomSpace::from_wedge2(W, W),
      tower.delta_components(1, 0),
      Subspace(),
      Subspace(),
      0,
      exact::QuotientMap(Subspace(0)),
  };
  d.g1 = exact::kernel_basis(d.delta);
  d.im_delta = Subspace::column_span(d.delta);
  d.h02_dim = d.hom_l2w.flattened_dim() - d.im_delta.dim();
  d.quotient = exact::QuotientMap(d.im_delta);
  if (d.delta.rows() != d.hom_l2w.flattened_dim() || d.delta.cols() != d.hom_wg.flattened_dim() ||
      d.g1.dim() + d.im_delta.dim() != d.hom_wg.flattened_dim() || d.quotient.dim() != d.h02_dim)
    throw ConsistencyError("spencer_delta: dimension bookkeeping failed");
  return d;
}

SpencerComplexData spencer_delta(const SuperVectorSpace& W, const std::vector<Matrix>& g) {
  return spencer_delta(EmbeddedAlgebra::from_matrices(W, g));
}

Subspace prolongation(const SpencerComplexData& data, int k) {
  return ProlongationTower(data.g, k).prolongation_subspace(k);
}

Cohomology spencer_cohomology(const SpencerComplexData& data, int i, bool with_basis) {
  return spencer_cohomology(ProlongationTower(data.g, i < 0 ? 0 : i), i, with_basis);
}

SparseMatrix torsion_action(const SpencerComplexData& data, std::size_t k) {
  const SuperVectorSpace& W = data.W();
  const Matrix& X = data.g.matrix(k);
  return cochain_action(CochainSpace(W, 2, W.parities()), X, data.g.parity(k), X);
}

SparseMatrix connection_action(const SpencerComplexData& data, std::size_t k) {
  const auto& alg = data.g.algebra();
  return cochain_action(CochainSpace(data.W(), 1, alg.carrier().parities()), data.g.matrix(k), alg.parity(k),
                        alg.ad(k));
}

Subspace stabilizer(const SpencerComplexData& data, const GradedTensor& T0) {
  const SparseVector t0 = exact::to_sparse(superlin::hom_flatten(T0, data.hom_l2w));
  const std::size_t m = data.g.dim();
  std::vector<SparseVector> cols(m);
  for (std::size_t k = 0; k < m; ++k) cols[k] = torsion_action(data, k).apply(t0);
  const Subspace stab = exact::kernel_basis(SparseMatrix::from_columns(data.hom_l2w.flattened_dim(), std::move(cols)));
  const auto& alg = data.g.algebra();
  for (const auto& u : stab.basis_vectors())
    for (const auto& v : stab.basis_vectors())
      if (!stab.contains(alg.bracket(u, v))) throw ConsistencyError("stabilizer is not closed under the bracket");
  return stab;
}

H02Action induced_h02_action(const SpencerComplexData& data) {
  H02Action out;
  const auto& comp = data.quotient.complement();
  for (std::size_t k = 0; k < data.g.dim(); ++k) {
    const SparseMatrix A = torsion_action(data, k);
    const SparseMatrix B = connection_action(data, k);
    for (std::size_t c = 0; c < data.delta.cols(); ++c)
      if (A.apply(data.delta.column(c)) != data.delta.apply(B.column(c)))
        throw ConsistencyError("action does not descend to H^{0,2}: delta is not equivariant for " +
                               data.g.label(k));
    Matrix M(data.h02_dim, data.h02_dim);
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const Vector col = data.quotient.project(A.column(comp[j]));
      for (std::size_t i = 0; i < col.size(); ++i) M(i, j) = col[i];
    }
    if (!M.is_zero()) out.trivial = false;
    out.matrices.push_back(std::move(M));
  }
  return out;
}

TorsionClass torsion_class(const SpencerComplexData& data, const GradedTensor& T) {
  const Vector flat = superlin::hom_flatten(T, data.hom_l2w);
  return {T, data.quotient.project(flat)};
}

FlatnessResult first_order_flat(const SpencerComplexData& data, const H02Action& action, const GradedTensor& T,
                                const GradedTensor& T0) {
  const Vector t = torsion_class(data, T).coords;
  const Vector t0 = torsion_class(data, T0).coords;
  Vector diff(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) diff[i] = t[i] - t0[i];
  if (action.trivial) return {exact::is_zero(diff), "exact class equality"};
  std::vector<Vector> tangent;
  for (const auto& M : action.matrices) tangent.push_back(M * t0);
  return {Subspace::span(t.size(), tangent).contains(diff), "first-order orbit test"};
}

}  // namespace sgtc::spencer
