#include "doctest.h"
#include "sgtc/clifford/clifford.hpp"
#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/spencer/ambiguity.hpp"
#include "sgtc/spencer/cartan.hpp"
#include "sgtc/spencer/complex.hpp"
#include "sgtc/superlie/graded.hpp"
#include "sgtc/superlie/structure.hpp"

using namespace sgtc::spencer;
using sgtc::exact::Matrix;
using sgtc::exact::Scalar;
using sgtc::exact::Vector;

namespace {

struct Model3d {
  sgtc::clifford::SpinorModule module;
  EmbeddedAlgebra g;
  SpencerComplexData data;
  GradedTensor T0;
};

Model3d model3d(bool full_s = true) {
  const auto module = sgtc::clifford::full_module(sgtc::clifford::build_clifford(2, 1, 2));
  auto g = sgtc::superlie::build_structure_algebra(
      module, full_s ? sgtc::superlie::full_odd_block(3, 2) : std::vector<Matrix>{});
  auto data = spencer_delta(g);
  auto T0 = sgtc::clifford::t0_tensor(module, g.W());
  return {module, g, std::move(data), std::move(T0)};
}

EmbeddedAlgebra so_n(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix m(n, n);
      m(a, b) = 1;
      m(b, a) = -1;
      basis.push_back(m);
    }
  return EmbeddedAlgebra::from_matrices(SuperVectorSpace::even(n), basis);
}

Vector random_vector(std::size_t n, unsigned seed) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>((seed * 2654435761u + i * 40503u) % 7) - 3;
  return v;
}

GradedTensor plus(const SpencerComplexData& d, const GradedTensor& T, const Vector& flat_delta) {
  Vector t = sgtc::superlin::hom_flatten(T, d.hom_l2w);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += flat_delta[i];
  return sgtc::superlin::hom_unflatten(t, d.hom_l2w);
}

}  // namespace

TEST_CASE("3d model dimension block") {
  const auto m = model3d();
  CHECK(m.data.hom_wg.flattened_dim() == 45);
  CHECK(m.data.hom_l2w.flattened_dim() == 60);
  CHECK(m.data.g1.dim() == 12);
  CHECK(m.data.im_delta.dim() == 33);
  CHECK(m.data.h02_dim == 27);
  CHECK(m.data.h02_projection().rows() == 27);
}

TEST_CASE("delta is parity preserving and super antisymmetric") {
  const auto m = model3d();
  const auto& d = m.data;
  for (std::size_t c = 0; c < d.delta.cols(); ++c) {
    for (const auto& e : d.delta.column(c)) CHECK(d.hom_l2w.parity(e.index) == d.hom_wg.parity(c));
    const auto T = sgtc::superlin::hom_unflatten(sgtc::exact::to_dense(d.delta.column(c), 60), d.hom_l2w);
    CHECK(T.respects_symmetry());
  }
}

TEST_CASE("prolongation tower of the 3d model") {
  const auto m = model3d();
  const ProlongationTower tower(m.g, 3);
  CHECK(tower.dim(-1) == 5);
  CHECK(tower.dim(0) == 9);
  CHECK(tower.dim(1) == 12);
  CHECK(tower.dim(2) == 20);
  CHECK(tower.dim(3) == 30);
  for (int k = 1; k <= 3; ++k) CHECK(tower.is_supersymmetric(k));
  CHECK(tower.prolongation_subspace(1) == m.data.g1);
  CHECK(prolongation(m.data, 1) == m.data.g1);
  // delta o delta = 0 on Hom(W, g^(1)) -> Hom(Lambda^3 W, W)
  const auto d1 = tower.delta(1, 1);
  const auto d2 = tower.delta(2, 0);
  for (std::size_t c = 0; c < d1.cols(); ++c) CHECK(d2.apply(d1.column(c)).empty());
}

TEST_CASE("higher Spencer cohomology") {
  const auto m = model3d();
  const auto h0 = spencer_cohomology(m.data, 0, true);
  CHECK(h0.dim == 27);
  CHECK(h0.basis->size() == 27);
  const auto h1 = spencer_cohomology(m.data, 1, true);
  CHECK(h1.dim == 6);
  CHECK(h1.basis->size() == 6);
  CHECK(spencer_cohomology(m.data, 2).dim == 0);

  const auto o3 = spencer_delta(so_n(3));
  CHECK(o3.g1.dim() == 0);
  CHECK(o3.h02_dim == 0);
  CHECK(spencer_cohomology(o3, 1).dim == 6);
  CHECK(spencer_cohomology(o3, 2).dim == 0);
}

TEST_CASE("U(1) in gl(2)") {
  const auto d = spencer_delta(SuperVectorSpace::even(2), {Matrix{{0, -1}, {1, 0}}});
  CHECK(d.delta.rows() == 2);
  CHECK(d.delta.cols() == 2);
  CHECK(d.g1.dim() == 0);
  CHECK(d.h02_dim == 0);
}

TEST_CASE("spencer_delta rejects a non-subalgebra") {
  CHECK_THROWS_AS(spencer_delta(SuperVectorSpace::even(2), {Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}}),
                  sgtc::ValidationError);
}

TEST_CASE("stabilizer of T0") {
  const auto m = model3d();
  const auto stab = stabilizer(m.data, m.T0);
  CHECK(stab.dim() == 3);
  std::vector<sgtc::exact::SparseVector> spin;
  for (std::size_t k = 0; k < 3; ++k) spin.push_back({{k, Scalar(1)}});
  CHECK(stab == Subspace::span(9, spin));

  GradedTensor zero = m.data.hom_l2w.make_tensor();
  CHECK(stabilizer(m.data, zero).dim() == 9);
  const auto s0 = model3d(false);
  CHECK(stabilizer(s0.data, s0.T0).dim() == s0.g.dim());
}

TEST_CASE("induced action on H02 descends") {
  const auto m = model3d();
  const auto act = induced_h02_action(m.data);
  CHECK(act.matrices.size() == 9);
  for (const auto& M : act.matrices) CHECK(M.rows() == 27);
}

TEST_CASE("torsion classes and first-order flatness") {
  const auto m = model3d();
  const auto& d = m.data;
  const auto act = induced_h02_action(d);
  const auto c0 = torsion_class(d, m.T0);
  CHECK_FALSE(sgtc::exact::is_zero(c0.coords));
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const Vector dphi = d.delta.apply(random_vector(45, seed));
    const auto T = plus(d, m.T0, dphi);
    CHECK(torsion_class(d, T).coords == c0.coords);
    CHECK(first_order_flat(d, act, T, m.T0).flat);
  }
  CHECK(first_order_flat(d, act, m.T0, m.T0).flat);

  // a complement basis vector outside the orbit tangent
  std::vector<Vector> tangent;
  for (const auto& M : act.matrices) tangent.push_back(M * c0.coords);
  const auto tan = Subspace::span(d.h02_dim, tangent);
  bool found = false;
  for (std::size_t j = 0; j < d.h02_dim && !found; ++j) {
    if (tan.contains(sgtc::exact::unit_vector(d.h02_dim, j))) continue;
    const auto T = plus(d, m.T0, sgtc::exact::unit_vector(60, d.quotient.complement()[j]));
    const auto r = first_order_flat(d, act, T, m.T0);
    CHECK_FALSE(r.flat);
    found = true;
  }
  CHECK(found);
}

TEST_CASE("O(n) torsion is always removable") {
  const auto d = spencer_delta(so_n(3));
  const auto act = induced_h02_action(d);
  CHECK(act.trivial);
  const auto T = sgtc::superlin::hom_unflatten(random_vector(9, 3), d.hom_l2w);
  CHECK(torsion_class(d, T).coords.empty());
}

TEST_CASE("connection ambiguity of the 3d model") {
  const auto m = model3d();
  const auto r = connection_ambiguity_check_3d(m.data, m.T0, 100, 7);
  CHECK(r.symmetric_dim == 12);
  CHECK(r.image_dim == 12);
  CHECK(r.image_is_g1);
  CHECK(r.symmetric_zero == 100);
  CHECK(r.asymmetric_moved == 100);
  CHECK(r.ok());
  const auto s0 = model3d(false);
  CHECK_THROWS_AS(connection_ambiguity_check_3d(s0.data, s0.T0), sgtc::ValidationError);
}

TEST_CASE("Cartan adjustment map of the superconformal grading") {
  const auto ga = sgtc::superlie::build_superconformal_3d();
  const auto A = cartan_adjustment_map(ga);
  CHECK(A.domain_dim == 25);
  CHECK(A.codomain_dim == 72);
  CHECK(A.kernel_dim == 0);
  CHECK(A.rank == 25);
  CHECK(A.A.apply(sgtc::exact::SparseVector{}).empty());
  auto broken = ga;
  broken.twice_degree[0] = 4;
  CHECK_THROWS_AS(cartan_adjustment_map(broken), sgtc::ValidationError);
}
