#pragma once

#include <string>
#include <vector>

#include "sgtc/superlie/embedded.hpp"

namespace sgtc::superlie {

// A super Lie algebra with a basis adapted to a grading in (1/2)Z. Degrees are
// stored doubled: -2, -1, 0, 1, 2 for -1, -1/2, 0, 1/2, 1.
struct GradedAlgebra {
  std::string name;
  std::string note;
  EmbeddedAlgebra base;
  std::vector<int> twice_degree;

  std::vector<std::size_t> indices(int twice_deg) const;
  std::size_t dim(int twice_deg) const { return indices(twice_deg).size(); }
};

// Degree additivity of every basis bracket and parity = integrality of degree.
ValidationReport validate_grading(const GradedAlgebra& ga);

// Graded basis from the eigenspaces of ad(H) for a diagonalizable grading
// element H; throws ConsistencyError if eigenvalues outside {-1,..,1} appear.
GradedAlgebra grade_by_element(const EmbeddedAlgebra& g, const Matrix& H, const std::string& name);

// osp(1|4): even part sp(4,R) = so(3,2), odd part R^4, graded by
// H = diag(0; 1/2, 1/2, -1/2, -1/2). Degree dims (3, 2, 4, 2, 3).
GradedAlgebra build_superconformal_3d();

}  // namespace sgtc::superlie
