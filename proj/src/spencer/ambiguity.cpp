#include "sgtc/spencer/ambiguity.hpp"

#include <random>

#include "sgtc/error.hpp"

namespace sgtc::spencer {

using exact::Vector;

namespace {

constexpr std::size_t kP = 3;  // even dimension, = dim S^2 R^2
constexpr std::size_t kQ = 2;
constexpr std::size_t kU = kP * kP * kQ;

std::size_t u_index(std::size_t P, std::size_t Q, std::size_t alpha) { return (P * kP + Q) * kQ + alpha; }

// Symmetric pairs (0,0), (0,1), (1,1) of spinor indices.
constexpr std::size_t kPair[kP][2] = {{0, 0}, {0, 1}, {1, 1}};

struct Embedding {
  Matrix Tinv;                       // vector index b -> S^2 R^2 coefficients
  std::vector<std::vector<Vector>> S;  // g coordinates of E_{p+alpha, c}
};

Embedding make_embedding(const SpencerComplexData& data, const GradedTensor& T0) {
  const SuperVectorSpace& W = data.W();
  if (W.even_dim() != kP || W.odd_dim() != kQ || !W.is_canonical())
    throw ValidationError("connection ambiguity check needs W = R^{3|2}");
  Matrix T(kP, kP);
  for (std::size_t P = 0; P < kP; ++P)
    for (std::size_t c = 0; c < kP; ++c) T(c, P) = T0({kP + kPair[P][0], kP + kPair[P][1], c});
  const auto inv = exact::inverse(T);
  if (!inv) throw ValidationError("T0 does not identify S^2 R^2 with R^3");
  Embedding e{*inv, {}};
  e.S.assign(kQ, std::vector<Vector>(kP));
  for (std::size_t a = 0; a < kQ; ++a)
    for (std::size_t c = 0; c < kP; ++c) {
      const auto x = data.g.coordinates(Matrix::elementary(kP + kQ, kP + kQ, kP + a, c));
      if (!x) throw ValidationError("connection ambiguity check needs the full odd block in g");
      e.S[a][c] = *x;
    }
  return e;
}

SparseVector phi_of(const SpencerComplexData& data, const Embedding& e, const Vector& U) {
  const std::size_t m = data.g.dim();
  Vector phi(data.hom_wg.flattened_dim());
  for (std::size_t b = 0; b < kP; ++b)
    for (std::size_t c = 0; c < kP; ++c)
      for (std::size_t a = 0; a < kQ; ++a) {
        exact::Scalar u;
        for (std::size_t P = 0; P < kP; ++P)
          for (std::size_t Q = 0; Q < kP; ++Q) u += e.Tinv(P, b) * e.Tinv(Q, c) * U[u_index(P, Q, a)];
        if (sgn(u) == 0) continue;
        for (std::size_t x = 0; x < m; ++x) phi[b * m + x] += u * e.S[a][c][x];
      }
  return exact::to_sparse(phi);
}

bool pair_symmetric(const Vector& U) {
  for (std::size_t P = 0; P < kP; ++P)
    for (std::size_t Q = 0; Q < kP; ++Q)
      for (std::size_t a = 0; a < kQ; ++a)
        if (U[u_index(P, Q, a)] != U[u_index(Q, P, a)]) return false;
  return true;
}

}  // namespace

AmbiguityReport connection_ambiguity_check_3d(const SpencerComplexData& data, const GradedTensor& T0,
                                              std::size_t draws, std::uint64_t seed) {
  const Embedding e = make_embedding(data, T0);
  AmbiguityReport r;

  std::vector<SparseVector> gens;
  for (std::size_t P = 0; P < kP; ++P)
    for (std::size_t Q = 0; Q < kP; ++Q)
      for (std::size_t a = 0; a < kQ; ++a) {
        SparseVector v{{u_index(P, Q, a), exact::Scalar(1)}};
        exact::axpy(v, exact::Scalar(1), SparseVector{{u_index(Q, P, a), exact::Scalar(1)}});
        gens.push_back(std::move(v));
      }
  const Subspace sym = Subspace::span(kU, std::move(gens));
  r.symmetric_dim = sym.dim();

  std::vector<SparseVector> image;
  for (const auto& u : sym.basis_vectors()) image.push_back(phi_of(data, e, exact::to_dense(u, kU)));
  const Subspace img = Subspace::span(data.hom_wg.flattened_dim(), std::move(image));
  r.image_dim = img.dim();
  r.image_is_g1 = img == data.g1;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  r.draws = draws;
  for (std::size_t k = 0; k < draws; ++k) {
    Vector U(kU);
    for (const auto& b : sym.basis_vectors()) {
      const exact::Scalar c(coeff(rng));
      for (const auto& x : b) U[x.index] += c * x.value;
    }
    if (data.delta.apply(phi_of(data, e, U)).empty()) ++r.symmetric_zero;

    Vector V(kU);
    do {
      for (auto& x : V) x = coeff(rng);
    } while (pair_symmetric(V));
    if (!data.delta.apply(phi_of(data, e, V)).empty()) ++r.asymmetric_moved;
  }
  return r;
}

}  // namespace sgtc::spencer
