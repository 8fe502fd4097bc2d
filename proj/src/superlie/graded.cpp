#include "sgtc/superlie/graded.hpp"

#include "sgtc/error.hpp"
#include "sgtc/superlie/group_data.hpp"

namespace sgtc::superlie {

using exact::Vector;

std::vector<std::size_t> GradedAlgebra::indices(int twice_deg) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < twice_degree.size(); ++k)
    if (twice_degree[k] == twice_deg) out.push_back(k);
  return out;
}

ValidationReport validate_grading(const GradedAlgebra& ga) {
  ValidationReport r;
  const auto& g = ga.base.algebra();
  if (ga.twice_degree.size() != g.dim()) {
    r.violations.push_back({"shape", {}, "one degree per basis element required"});
    return r;
  }
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const bool half = ga.twice_degree[a] % 2 != 0;
    if (half != superlin::is_odd(g.parity(a))) r.violations.push_back({"degree_parity", {a}, g.carrier().label(a)});
    for (std::size_t b = 0; b < g.dim(); ++b)
      for (const auto& e : g.bracket(a, b))
        if (ga.twice_degree[e.index] != ga.twice_degree[a] + ga.twice_degree[b])
          r.violations.push_back({"degree_additivity", {a, b, e.index}, ""});
  }
  return r;
}

GradedAlgebra grade_by_element(const EmbeddedAlgebra& g, const Matrix& H, const std::string& name) {
  const auto h = g.coordinates(H);
  if (!h) throw ValidationError("grading element is not in the algebra");
  // ad(H) in the basis of g
  Matrix ad(g.dim(), g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const Matrix br = supercommutator(H, Parity::Even, g.matrix(k), g.parity(k));
    const auto c = g.coordinates(br);
    for (std::size_t i = 0; i < g.dim(); ++i) ad(i, k) = (*c)[i];
  }
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int td = -2; td <= 2; ++td) {
    const Matrix shifted = ad - Scalar(td, 2) * Matrix::identity(g.dim());
    const auto eig = exact::kernel_basis(shifted);
    std::size_t count = 0;
    for (const auto& v : eig.basis_vectors()) {
      basis.push_back(g.element(exact::to_dense(v, g.dim())));
      const std::string deg = td % 2 == 0 ? std::to_string(td / 2) : (td < 0 ? "-" : "") + std::string("1/2");
      labels.push_back("g[" + deg + "]" + std::to_string(++count));
      degrees.push_back(td);
    }
  }
  if (basis.size() != g.dim()) throw ConsistencyError("grading element has eigenvalues outside [-1, 1]");
  GradedAlgebra ga;
  ga.name = name;
  ga.base = EmbeddedAlgebra::from_matrices(g.W(), std::move(basis), std::move(labels));
  ga.twice_degree = std::move(degrees);
  return ga;
}

GradedAlgebra build_superconformal_3d() {
  const EmbeddedAlgebra osp = osp_superalgebra(1, 2);
  Matrix H(5, 5);
  H(1, 1) = H(2, 2) = Scalar(1, 2);
  H(3, 3) = H(4, 4) = Scalar(-1, 2);
  GradedAlgebra ga = grade_by_element(osp, H, "osp(1|4)");
  ga.note = "also written OSp(1|2); the 5-grading with g[-1] = R^3 forces even part sp(4,R) = so(3,2)";
  return ga;
}

}  // namespace sgtc::superlie
