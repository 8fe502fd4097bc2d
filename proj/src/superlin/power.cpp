#include "sgtc/superlin/power.hpp"

#include <limits>

#include "sgtc/error.hpp"

namespace sgtc::superlin {

namespace {

bool admissible_repeat(Parity p, PowerKind kind) {
  return kind == PowerKind::Exterior ? is_odd(p) : !is_odd(p);
}

}  // namespace

PowerBasis::PowerBasis(const SuperVectorSpace& base, std::size_t degree, PowerKind kind)
    : base_(base), degree_(degree), kind_(kind) {
  const std::size_t n = base_.dim();
  long double bound = 1;
  for (std::size_t k = 0; k < degree_; ++k) bound *= static_cast<long double>(n + 1);
  if (bound > static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    throw DimensionError("PowerBasis: degree too large for index keys");

  std::vector<std::size_t> t(degree_);
  // Depth-first enumeration of non-decreasing tuples in lexicographic order.
  auto emit = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == degree_) {
      Parity par = Parity::Even;
      for (std::size_t i : t) par += base_.parity(i);
      lookup_.emplace(key(t.data()), parities_.size());
      tuples_.insert(tuples_.end(), t.begin(), t.end());
      parities_.push_back(par);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      if (pos > 0 && t[pos - 1] == i && !admissible_repeat(base_.parity(i), kind_)) continue;
      t[pos] = i;
      self(self, pos + 1, i);
    }
  };
  emit(emit, 0, 0);
}

std::uint64_t PowerBasis::key(const std::size_t* t) const {
  std::uint64_t k = 0;
  const std::uint64_t radix = base_.dim() + 1;
  for (std::size_t i = 0; i < degree_; ++i) k = k * radix + t[i];
  return k;
}

std::vector<std::size_t> PowerBasis::tuple_vector(std::size_t i) const {
  return std::vector<std::size_t>(tuple(i), tuple(i) + degree_);
}

long PowerBasis::find(const std::size_t* sorted) const {
  auto it = lookup_.find(key(sorted));
  return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

PowerBasis::Canonical PowerBasis::canonical(std::vector<std::size_t> f) const {
  if (f.size() != degree_) throw DimensionError("PowerBasis::canonical: wrong number of factors");
  int sign = 1;
  // Insertion sort, tracking one exchange sign per adjacent swap.
  for (std::size_t i = 1; i < f.size(); ++i)
    for (std::size_t j = i; j > 0 && f[j - 1] > f[j]; --j) {
      const Parity a = base_.parity(f[j - 1]), b = base_.parity(f[j]);
      sign *= kind_ == PowerKind::Exterior ? wedge_swap_sign(a, b) : symmetric_swap_sign(a, b);
      std::swap(f[j - 1], f[j]);
    }
  const long idx = find(f.data());
  if (idx < 0) return {0, 0};
  return {sign, static_cast<std::size_t>(idx)};
}

SuperVectorSpace PowerBasis::space() const {
  std::vector<std::string> labels;
  const char* sep = kind_ == PowerKind::Exterior ? "^" : ".";
  for (std::size_t i = 0; i < size(); ++i) {
    std::string l;
    for (std::size_t k = 0; k < degree_; ++k) l += (k ? sep : "") + base_.label(tuple(i)[k]);
    labels.push_back(l.empty() ? "1" : l);
  }
  return SuperVectorSpace(std::move(labels), parities_);
}

SuperVectorSpace super_exterior_square(const SuperVectorSpace& W) {
  return PowerBasis(W, 2, PowerKind::Exterior).space();
}

}  // namespace sgtc::superlin
