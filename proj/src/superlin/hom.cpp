#include "sgtc/superlin/hom.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlin {

using exact::Scalar;
using exact::Vector;

HomSpace::HomSpace(SuperVectorSpace source, SuperVectorSpace target)
    : source_(std::move(source)), target_(std::move(target)) {}

HomSpace HomSpace::from_wedge2(const SuperVectorSpace& W, SuperVectorSpace target) {
  PowerBasis wedge(W, 2, PowerKind::Exterior);
  HomSpace h(wedge.space(), std::move(target));
  h.wedge_.emplace(std::move(wedge));
  return h;
}

const PowerBasis& HomSpace::wedge() const {
  if (!wedge_) throw DimensionError("HomSpace source is not a super exterior square");
  return *wedge_;
}

Parity HomSpace::parity(std::size_t flat) const {
  const auto [s, t] = split(flat);
  return source_.parity(s) + target_.parity(t);
}

GradedTensor HomSpace::make_tensor() const {
  if (wedge_) {
    const SuperVectorSpace& W = wedge_->base();
    return GradedTensor({{W, Variance::Lower}, {W, Variance::Lower}, {target_, Variance::Upper}},
                        Symmetry::SuperAntisymmetricPair);
  }
  return GradedTensor({{source_, Variance::Lower}, {target_, Variance::Upper}});
}

Vector hom_flatten(const GradedTensor& T, const HomSpace& H) {
  const GradedTensor layout = H.make_tensor();
  if (!(T.slots() == layout.slots())) throw DimensionError("hom_flatten: tensor slots do not match Hom space");
  Vector v(H.flattened_dim());
  const std::size_t m = H.target().dim();
  if (!H.wedge_source()) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = T.data()[k];
    return v;
  }
  const PowerBasis& wb = H.wedge();
  for (std::size_t s = 0; s < wb.size(); ++s) {
    const std::size_t* ij = wb.tuple(s);
    for (std::size_t t = 0; t < m; ++t) v[H.flat_index(s, t)] = T({ij[0], ij[1], t});
  }
  return v;
}

GradedTensor hom_unflatten(const Vector& v, const HomSpace& H) {
  if (v.size() != H.flattened_dim()) throw DimensionError("hom_unflatten: length mismatch");
  GradedTensor T = H.make_tensor();
  const std::size_t m = H.target().dim();
  if (!H.wedge_source()) {
    T.data() = v;
    return T;
  }
  const PowerBasis& wb = H.wedge();
  const SuperVectorSpace& W = wb.base();
  for (std::size_t s = 0; s < wb.size(); ++s) {
    const std::size_t i = wb.tuple(s)[0], j = wb.tuple(s)[1];
    const int swap = wedge_swap_sign(W.parity(i), W.parity(j));
    for (std::size_t t = 0; t < m; ++t) {
      const Scalar& x = v[H.flat_index(s, t)];
      T({i, j, t}) = x;
      if (i != j) T({j, i, t}) = swap * x;
    }
  }
  return T;
}

}  // namespace sgtc::superlin
