#pragma once

#include <cstddef>
#include <utility>

#include "sgtc/exact/scalar.hpp"
#include "sgtc/superlin/power.hpp"
#include "sgtc/superlin/tensor.hpp"

namespace sgtc::superlin {

// Hom(A, B) with flat coordinate (a, b) -> a * dim B + b. When built with
// from_wedge2, A is the super exterior square of a base space W and tensors
// carry three slots (W, W, B^) with super-antisymmetry in the first two.
class HomSpace {
 public:
  HomSpace(SuperVectorSpace source, SuperVectorSpace target);
  static HomSpace from_wedge2(const SuperVectorSpace& W, SuperVectorSpace target);

  const SuperVectorSpace& source() const { return source_; }
  const SuperVectorSpace& target() const { return target_; }
  bool wedge_source() const { return wedge_.has_value(); }
  // Only for wedge sources.
  const PowerBasis& wedge() const;

  std::size_t flattened_dim() const { return source_.dim() * target_.dim(); }
  std::size_t flat_index(std::size_t s, std::size_t t) const { return s * target_.dim() + t; }
  std::pair<std::size_t, std::size_t> split(std::size_t flat) const {
    return {flat / target_.dim(), flat % target_.dim()};
  }
  Parity parity(std::size_t flat) const;

  // Empty tensor with the slot layout flatten expects.
  GradedTensor make_tensor() const;

 private:
  SuperVectorSpace source_;
  SuperVectorSpace target_;
  std::optional<PowerBasis> wedge_;
};

// Throws DimensionError when the tensor slots do not match H.
exact::Vector hom_flatten(const GradedTensor& T, const HomSpace& H);
GradedTensor hom_unflatten(const exact::Vector& v, const HomSpace& H);

}  // namespace sgtc::superlin
