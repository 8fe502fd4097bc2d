#include "sgtc/spencer/cartan.hpp"

#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/superlin/conventions.hpp"
#include "sgtc/superlin/power.hpp"

namespace sgtc::spencer {

using exact::Scalar;
using exact::SparseVector;
using superlin::is_odd;

CartanMap cartan_adjustment_map(const superlie::GradedAlgebra& ga) {
  const auto report = superlie::validate_grading(ga);
  if (!report.ok()) throw ValidationError("cartan_adjustment_map: invalid grading: " + report.summary());
  for (int td : {-2, -1, 0, 1, 2})
    if (ga.dim(td) == 0) throw ValidationError("cartan_adjustment_map: degree " + std::to_string(td) + "/2 is empty");

  const auto& g = ga.base.algebra();
  auto cat = [&](int a, int b) {
    auto v = ga.indices(a);
    const auto w = ga.indices(b);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  const std::vector<std::size_t> wb = cat(-2, -1);
  const std::vector<std::size_t> tb = cat(1, 2);
  const std::vector<std::size_t> pb = cat(-1, 0);

  std::vector<std::string> labels;
  std::vector<superlin::Parity> parities;
  for (std::size_t i : wb) {
    labels.push_back(g.carrier().label(i));
    parities.push_back(g.parity(i));
  }
  const superlin::PowerBasis l2(superlin::SuperVectorSpace(labels, parities), 2, superlin::PowerKind::Exterior);

  std::vector<long> pos(g.dim(), -1);
  for (std::size_t k = 0; k < pb.size(); ++k) pos[pb[k]] = static_cast<long>(k);

  CartanMap out;
  out.domain_dim = wb.size() * tb.size();
  out.codomain_dim = l2.size() * pb.size();
  exact::SparseBuilder A(out.codomain_dim, out.domain_dim);
  auto add = [&](std::size_t J, std::size_t col, const SparseVector& br, int sign) {
    for (const auto& e : br)
      if (pos[e.index] >= 0) A.add(J * pb.size() + static_cast<std::size_t>(pos[e.index]), col, sign * e.value);
  };
  for (std::size_t J = 0; J < l2.size(); ++J) {
    const std::size_t i = l2.tuple(J)[0];
    const std::size_t j = l2.tuple(J)[1];
    const int s = is_odd(parities[i]) && is_odd(parities[j]) ? 1 : -1;
    for (std::size_t t = 0; t < tb.size(); ++t) {
      add(J, j * tb.size() + t, g.bracket(wb[i], tb[t]), 1);
      add(J, i * tb.size() + t, g.bracket(wb[j], tb[t]), s);
    }
  }
  out.A = A.build();
  out.rank = exact::rank(out.A);
  out.kernel_dim = out.domain_dim - out.rank;
  return out;
}

}  // namespace sgtc::spencer
