#pragma once

#include <string>
#include <vector>

#include "sgtc/clifford/clifford.hpp"
#include "sgtc/superlie/embedded.hpp"

namespace sgtc::superlie {

// Optional internal symmetry acting on the spinor factor only.
struct InternalSymmetry {
  std::vector<Matrix> action;  // q x q
  std::vector<std::string> labels;
};

// g inside gl(R^{p|q}): even part diag(rho1(x), rho2(x)) for x in spin plus
// diag(0, k) for k in K; odd part the q x p matrices of S in the lower-left
// block. Throws InvarianceError naming an even generator that moves S out
// of itself.
EmbeddedAlgebra build_structure_algebra(const clifford::SpinorModule& module, const std::vector<Matrix>& S,
                                        const InternalSymmetry& K = {});
EmbeddedAlgebra build_structure_algebra(const clifford::CliffordData& cd, const std::vector<Matrix>& S);

// Hom(R^p, R^q) as q x p elementary matrices.
std::vector<Matrix> full_odd_block(std::size_t p, std::size_t q);

// The number of leading even generators coming from spin.
std::size_t spin_generator_count(const clifford::SpinorModule& module);

}  // namespace sgtc::superlie
