#include "sgtc/superlin/conventions.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlin {

int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<Parity>& parities) {
  if (perm.size() != parities.size()) throw DimensionError("koszul_sign: length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw DimensionError("koszul_sign: not a permutation");
    seen[p] = true;
  }
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign *= koszul(parities[perm[i]], parities[perm[j]]);
  return sign;
}

const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

}  // namespace sgtc::superlin
