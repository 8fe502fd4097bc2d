#include <random>

#include "doctest.h"
#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/superlin/hom.hpp"

using namespace sgtc::superlin;
using sgtc::exact::Matrix;
using sgtc::exact::Scalar;

namespace {

Scalar small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("super exterior square dimensions") {
  CHECK(super_exterior_square(SuperVectorSpace::standard(3, 2)).dim() == 12);
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(super_exterior_square(SuperVectorSpace::standard(n, 0)).dim() == n * (n - (n ? 1 : 0)) / 2);
    CHECK(super_exterior_square(SuperVectorSpace::standard(0, n)).dim() == n * (n + 1) / 2);
  }
  const SuperVectorSpace L = super_exterior_square(SuperVectorSpace::standard(3, 2));
  // even part Lambda^2(R^3) + S^2(R^2), odd part R^3 (x) R^2
  CHECK(L.even_dim() == 6);
  CHECK(L.odd_dim() == 6);
  CHECK(L.label(0) == "e1^e2");
}

TEST_CASE("koszul sign") {
  const std::vector<Parity> ee{Parity::Even, Parity::Even}, oo{Parity::Odd, Parity::Odd};
  CHECK(koszul_sign({1, 0}, ee) == 1);
  CHECK(koszul_sign({1, 0}, oo) == -1);
  CHECK(koszul_sign({0, 1}, oo) == 1);
  const std::vector<Parity> mixed{Parity::Odd, Parity::Even, Parity::Odd};
  CHECK(koszul_sign({2, 1, 0}, mixed) == -1);
  CHECK_THROWS_AS(koszul_sign({0, 0}, oo), sgtc::DimensionError);
}

TEST_CASE("koszul sign is multiplicative under composition") {
  const std::vector<Parity> par{Parity::Odd, Parity::Even, Parity::Odd, Parity::Odd};
  std::vector<std::size_t> p{0, 1, 2, 3};
  do {
    std::vector<std::size_t> s{0, 1, 2, 3};
    do {
      // Apply p, then s to the reordered sequence.
      std::vector<Parity> after(4);
      for (std::size_t i = 0; i < 4; ++i) after[i] = par[p[i]];
      std::vector<std::size_t> composed(4);
      for (std::size_t i = 0; i < 4; ++i) composed[i] = p[s[i]];
      CHECK(koszul_sign(composed, par) == koszul_sign(p, par) * koszul_sign(s, after));
    } while (std::next_permutation(s.begin(), s.end()));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("power basis canonical signs") {
  const SuperVectorSpace W = SuperVectorSpace::standard(2, 2);
  const PowerBasis L(W, 2, PowerKind::Exterior);
  auto a = L.canonical({1, 0});
  CHECK(a.sign == -1);
  CHECK(L.tuple_vector(a.index) == std::vector<std::size_t>{0, 1});
  CHECK(L.canonical({3, 2}).sign == 1);
  CHECK(L.canonical({0, 0}).sign == 0);
  CHECK(L.canonical({2, 2}).sign == 1);
  CHECK(L.canonical({2, 0}).sign == -1);
  const PowerBasis S(W, 2, PowerKind::Symmetric);
  CHECK(S.canonical({2, 2}).sign == 0);
  CHECK(S.canonical({3, 2}).sign == -1);
  CHECK(S.size() == 3 + 4 + 1);
  // Lambda^3 of R^{3|2}: 1 + 3*2 + 3*3 + 4 = 20
  CHECK(PowerBasis(SuperVectorSpace::standard(3, 2), 3, PowerKind::Exterior).size() == 20);
}

TEST_CASE("hom flatten basics and round trip") {
  const SuperVectorSpace W = SuperVectorSpace::standard(3, 2);
  const HomSpace H = HomSpace::from_wedge2(W, W);
  CHECK(H.flattened_dim() == 60);
  CHECK(HomSpace(W, SuperVectorSpace::even(9, "g")).flattened_dim() == 45);
  CHECK(sgtc::exact::is_zero(hom_flatten(H.make_tensor(), H)));

  const HomSpace P(W, W);
  GradedTensor basis = P.make_tensor();
  basis({1, 4}) = 1;
  CHECK(hom_flatten(basis, P) == sgtc::exact::unit_vector(25, P.flat_index(1, 4)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    sgtc::exact::Vector v(60);
    for (auto& x : v) x = small_rational(rng);
    const GradedTensor T = hom_unflatten(v, H);
    CHECK(T.respects_symmetry());
    CHECK(hom_flatten(T, H) == v);
  }
  const GradedTensor wrong({{W, Variance::Lower}, {W, Variance::Upper}});
  CHECK_THROWS_AS(hom_flatten(wrong, H), sgtc::DimensionError);
}

TEST_CASE("projection onto a symmetry type is idempotent") {
  const SuperVectorSpace W = SuperVectorSpace::standard(2, 2);
  std::mt19937 rng(11);
  for (Symmetry s : {Symmetry::SuperAntisymmetricPair, Symmetry::SuperSymmetricPair}) {
    GradedTensor T({{W, Variance::Lower}, {W, Variance::Lower}, {W, Variance::Upper}});
    for (auto& x : T.data()) x = small_rational(rng);
    const GradedTensor once = T.projected(s);
    CHECK(once.projected(s) == once);
    CHECK(once.respects_symmetry());
  }
  GradedTensor U({{W, Variance::Lower}, {W, Variance::Lower}, {W, Variance::Lower}, {W, Variance::Lower}});
  for (auto& x : U.data()) x = small_rational(rng);
  const GradedTensor once = U.projected(Symmetry::PairExchangeSymmetric);
  CHECK(once.projected(Symmetry::PairExchangeSymmetric) == once);
}

TEST_CASE("tensor parity") {
  const SuperVectorSpace W = SuperVectorSpace::standard(1, 1);
  GradedTensor T({{W, Variance::Lower}, {W, Variance::Upper}});
  CHECK_FALSE(T.parity());
  T({0, 1}) = 1;
  CHECK(*T.parity() == Parity::Odd);
  T({0, 0}) = 1;
  CHECK_THROWS_AS(T.parity(), sgtc::ValidationError);
}

TEST_CASE("even automorphisms induce automorphisms of the super exterior square") {
  const SuperVectorSpace W = SuperVectorSpace::standard(3, 2);
  const PowerBasis L(W, 2, PowerKind::Exterior);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix g(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (W.parity(i) == W.parity(j)) g(i, j) = small_rational(rng);
    if (!sgtc::exact::inverse(g)) continue;
    Matrix induced(L.size(), L.size());
    for (std::size_t c = 0; c < L.size(); ++c) {
      const std::size_t u = L.tuple(c)[0], v = L.tuple(c)[1];
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
          const Scalar coef = g(a, u) * g(b, v);
          if (sgn(coef) == 0) continue;
          const auto can = L.canonical({a, b});
          if (can.sign != 0) induced(can.index, c) += can.sign * coef;
        }
    }
    CHECK(sgtc::exact::rank(induced) == L.size());
  }
}
