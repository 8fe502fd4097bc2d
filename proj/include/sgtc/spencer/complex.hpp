#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgtc/exact/subspace.hpp"
#include "sgtc/spencer/prolongation.hpp"
#include "sgtc/superlin/hom.hpp"
#include "sgtc/superlin/tensor.hpp"

namespace sgtc::spencer {

using exact::Subspace;
using superlin::GradedTensor;
using superlin::HomSpace;

// delta : Hom(W, g) -> Hom(Lambda^2 W, W), dphi(v, w) = phi(v) w - (-1)^{|v||w|} phi(w) v.
// Columns follow Hom(W, g) flat coordinates (w, x); rows Hom(Lambda^2 W, W) ones.
struct SpencerComplexData {
  EmbeddedAlgebra g;
  HomSpace hom_wg;   // Hom(W, g), target labeled by g
  HomSpace hom_l2w;  // Hom(Lambda^2 W, W)
  SparseMatrix delta;
  Subspace g1;
  Subspace im_delta;
  std::size_t h02_dim = 0;
  exact::QuotientMap quotient;

  const SuperVectorSpace& W() const { return g.W(); }
  // h02_dim x dim Hom(Lambda^2 W, W)
  Matrix h02_projection() const { return quotient.matrix(); }
};

SpencerComplexData spencer_delta(const EmbeddedAlgebra& g);
// Throws ValidationError when the matrices do not span a subalgebra of gl(W).
SpencerComplexData spencer_delta(const SuperVectorSpace& W, const std::vector<Matrix>& g);

// g^(k) inside Hom(W, g^(k-1)) coordinates, k >= 1.
Subspace prolongation(const SpencerComplexData& data, int k);
Cohomology spencer_cohomology(const SpencerComplexData& data, int i, bool with_basis = false);

// Natural action of basis element k of g on Hom(Lambda^2 W, W) and Hom(W, g).
SparseMatrix torsion_action(const SpencerComplexData& data, std::size_t k);
SparseMatrix connection_action(const SpencerComplexData& data, std::size_t k);

// {x in g : x . T0 = 0} in g coordinates; bracket closure is verified.
Subspace stabilizer(const SpencerComplexData& data, const GradedTensor& T0);

struct H02Action {
  std::vector<Matrix> matrices;  // one h02_dim x h02_dim matrix per basis element of g
  bool trivial = true;
};
// Descent is checked through x . delta = delta . x on Hom(W, g); a failure
// raises ConsistencyError.
H02Action induced_h02_action(const SpencerComplexData& data);

struct TorsionClass {
  GradedTensor representative;
  exact::Vector coords;
};
TorsionClass torsion_class(const SpencerComplexData& data, const GradedTensor& T);

struct FlatnessResult {
  bool flat = false;
  std::string test;  // "exact class equality" or "first-order orbit test"
};
// Trivial action: [T] == [T0]. Otherwise the infinitesimal test [T] - [T0] in g . [T0].
FlatnessResult first_order_flat(const SpencerComplexData& data, const H02Action& action, const GradedTensor& T,
                                const GradedTensor& T0);

}  // namespace sgtc::spencer
