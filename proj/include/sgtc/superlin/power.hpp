#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sgtc/superlin/space.hpp"

namespace sgtc::superlin {

enum class PowerKind { Exterior, Symmetric };

// Basis of the super exterior (or symmetric) power of W. Basis elements are
// non-decreasing index tuples, in lexicographic order; for the exterior power
// an even index may not repeat, for the symmetric power an odd one may not.
class PowerBasis {
 public:
  PowerBasis(const SuperVectorSpace& base, std::size_t degree, PowerKind kind);

  const SuperVectorSpace& base() const { return base_; }
  std::size_t degree() const { return degree_; }
  PowerKind kind() const { return kind_; }
  std::size_t size() const { return parities_.size(); }

  // Entries tuple(i)[0..degree).
  const std::size_t* tuple(std::size_t i) const { return tuples_.data() + i * degree_; }
  std::vector<std::size_t> tuple_vector(std::size_t i) const;
  Parity parity(std::size_t i) const { return parities_[i]; }

  // Index of an already sorted tuple, or -1 when it is not a basis element.
  long find(const std::size_t* sorted) const;

  struct Canonical {
    int sign;           // 0 when the product vanishes
    std::size_t index;  // meaningful only when sign != 0
  };
  // Express the product of the factors in `factors` (in that order) as
  // sign * basis element.
  Canonical canonical(std::vector<std::size_t> factors) const;

  // Labels "a^b" (exterior) or "a.b" (symmetric); parities of the tuples.
  SuperVectorSpace space() const;

 private:
  std::uint64_t key(const std::size_t* t) const;

  SuperVectorSpace base_;
  std::size_t degree_;
  PowerKind kind_;
  std::vector<std::size_t> tuples_;
  std::vector<Parity> parities_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

// Lambda^2 W = Lambda^2(W_0) + W_0 (x) W_1 + S^2(W_1), dim p(p-1)/2 + pq + q(q+1)/2.
SuperVectorSpace super_exterior_square(const SuperVectorSpace& W);

}  // namespace sgtc::superlin
