#pragma once

#include <cstddef>
#include <cstdint>

#include "sgtc/spencer/complex.hpp"

namespace sgtc::spencer {

// Connection ambiguity of the 3d model on R^{3|2} with the full odd block.
// U in Hom(S^2 R^2 (x) S^2 R^2, R^2) shifts the odd connection; R^3 is
// identified with S^2 R^2 through T0(s_a, s_b) and U becomes the element
// phi_U(e_b) = sum_{c, alpha} U(b, c)^alpha S_{alpha c} of Hom(W, g).
struct AmbiguityReport {
  std::size_t symmetric_dim = 0;  // pair-exchange symmetric U
  std::size_t image_dim = 0;      // rank of U -> phi_U on that space
  bool image_is_g1 = false;
  std::size_t draws = 0;
  std::size_t symmetric_zero = 0;   // symmetric draws with delta phi_U = 0
  std::size_t asymmetric_moved = 0; // draws with a nonzero antisymmetric part and delta phi_U != 0
  bool ok() const {
    return symmetric_dim == 12 && image_dim == 12 && image_is_g1 && draws >= 100 && symmetric_zero == draws &&
           asymmetric_moved == draws;
  }
};

// Throws ValidationError unless data is the full-S model on R^{3|2} and T0
// induces an isomorphism S^2 R^2 -> R^3.
AmbiguityReport connection_ambiguity_check_3d(const SpencerComplexData& data, const GradedTensor& T0,
                                              std::size_t draws = 100, std::uint64_t seed = 1);

}  // namespace sgtc::spencer
