#include "brute_force.hpp"
#include "doctest.h"
#include "sgtc/spencer/complex.hpp"
#include "sgtc/spencer/prolongation.hpp"

using oracle::Matrix;
using oracle::Scalar;

TEST_CASE("flattened delta equals the brute-force triple loop") {
  const auto models = oracle::small_models();
  CHECK(models.size() >= 15);
  for (const auto& m : models) {
    CAPTURE(m.name);
    const auto data = sgtc::spencer::spencer_delta(m.g);
    const Matrix brute = oracle::brute_force_delta(m.W, m.g.matrices());
    CHECK(data.delta.to_dense() == brute);
  }
}

TEST_CASE("first prolongation of the 3d model from the symmetric-tensor definition") {
  const auto m = *sgtc::models::builtin_model("d3n1");
  CHECK(oracle::brute_force_prolongation_dim(m.W, m.g.matrices(), 1) == 12);
  CHECK(oracle::brute_force_prolongation_dim(m.W, m.g.matrices(), 2) == 20);
  const sgtc::spencer::ProlongationTower tower(m.g, 2);
  CHECK(tower.dim(1) == 12);
  CHECK(tower.dim(2) == 20);
}

TEST_CASE("prolongations agree with the symmetric-tensor definition on small models") {
  for (const auto& m : oracle::small_models()) {
    if (m.W.dim() > 5) continue;
    CAPTURE(m.name);
    const sgtc::spencer::ProlongationTower tower(m.g, 1);
    CHECK(tower.dim(1) == oracle::brute_force_prolongation_dim(m.W, m.g.matrices(), 1));
  }
}

TEST_CASE("U(1) delta by hand") {
  const auto u1 = sgtc::models::classical_models(1).unitary;
  REQUIRE(u1.g.dim() == 1);
  const Matrix& X = u1.g.matrix(0);
  // X = [[0, -c], [c, 0]]: delta(phi_0)(e0, e1) = X e1, delta(phi_1)(e0, e1) = -X e0
  const Scalar c = X(1, 0);
  CHECK(X(0, 1) == -c);
  const auto data = sgtc::spencer::spencer_delta(u1.g);
  Matrix hand(2, 2);
  hand(0, 0) = -c;
  hand(1, 1) = -c;
  CHECK(data.delta.to_dense() == hand);
  CHECK(data.h02_dim == 0);
}

TEST_CASE("Riemann curvature count for O(n) and the 3d model") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const sgtc::spencer::ProlongationTower t(sgtc::models::classical_models(n).orthogonal.g, 1);
    CHECK(sgtc::spencer::spencer_cohomology(t, 1).dim == n * n * (n * n - 1) / 12);
  }
  const sgtc::spencer::ProlongationTower t(sgtc::models::builtin_model("d3n1")->g, 1);
  CHECK(sgtc::spencer::spencer_cohomology(t, 1).dim == 9 * 8 / 12);
}

TEST_CASE("U(2) delta is injective so H02 = 24 - 16") {
  const auto u2 = sgtc::models::classical_models(2).unitary;
  const Matrix brute = oracle::brute_force_delta(u2.W, u2.g.matrices());
  CHECK(brute.rows() == 24);
  CHECK(brute.cols() == 16);
  CHECK(sgtc::exact::reference::rank(brute) == 16);
  CHECK(sgtc::spencer::spencer_delta(u2.g).h02_dim == 8);
}
