#include "sgtc/spencer/prolongation.hpp"

#include <algorithm>

#include "sgtc/error.hpp"
#include "sgtc/superlin/conventions.hpp"

namespace sgtc::spencer {

using exact::LinearSolver;
using exact::SparseBuilder;
using exact::SparseEntry;
using exact::Subspace;
using superlin::is_odd;

namespace {

std::size_t power(std::size_t n, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) r *= n;
  return r;
}

// Entries of v with index in [lo, lo + len), shifted down by lo.
SparseVector slice(const SparseVector& v, std::size_t lo, std::size_t len) {
  auto it = std::lower_bound(v.begin(), v.end(), lo, [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  SparseVector out;
  for (; it != v.end() && it->index < lo + len; ++it) out.push_back({it->index - lo, it->value});
  return out;
}

SparseVector merge_sorted(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const SparseEntry& e) { return sgn(e.value) == 0; });
  return out;
}

}  // namespace

ProlongationTower::ProlongationTower(const EmbeddedAlgebra& g, int max_degree)
    : W_(g.W()), max_degree_(max_degree) {
  if (max_degree < 0) throw DimensionError("ProlongationTower: max_degree must be >= 0");
  const std::size_t n = W_.dim();

  Level w;
  for (std::size_t d = 0; d < n; ++d) {
    w.basis.push_back({{d, Scalar(1)}});
    w.parity.push_back(W_.parity(d));
  }
  levels_.push_back(std::move(w));

  Level g0;
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const Matrix& X = g.matrix(k);
    SparseVector y;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        if (sgn(X(d, b)) != 0) y.push_back({b * n + d, X(d, b)});
    g0.basis.push_back(std::move(y));
    g0.parity.push_back(g.parity(k));
  }
  levels_.push_back(std::move(g0));

  for (int k = 1; k <= max_degree; ++k) {
    const Level& prev = levels_.back();
    if (prev.basis.empty()) break;
    const std::size_t ts = tensor_size(k - 1);
    const std::size_t m = prev.basis.size();
    Level next;
    next.kernel = exact::kernel_basis(delta_components(1, k - 1));
    for (const auto& v : next.kernel.basis_vectors()) {
      std::vector<SparseEntry> entries;
      for (const auto& e : v) {
        const std::size_t a = e.index / m;
        for (const auto& c : prev.basis[e.index % m]) entries.push_back({a * ts + c.index, e.value * c.value});
      }
      SparseVector t = merge_sorted(std::move(entries));
      // parity of a component is the sum of the parities of its k + 2 indices
      std::optional<bool> odd;
      for (const auto& c : t) {
        bool o = false;
        for (std::size_t f = c.index, s = 0; s < static_cast<std::size_t>(k) + 2; ++s, f /= n)
          o ^= is_odd(W_.parity(f % n));
        if (odd && *odd != o) throw ConsistencyError("prolongation element is not homogeneous");
        odd = o;
      }
      next.parity.push_back(odd.value_or(false) ? Parity::Odd : Parity::Even);
      next.basis.push_back(std::move(t));
    }
    levels_.push_back(std::move(next));
  }
}

const ProlongationTower::Level& ProlongationTower::level(int k) const {
  if (k < -1 || k > max_degree_) throw DimensionError("ProlongationTower: degree out of range");
  const auto idx = static_cast<std::size_t>(k + 1);
  return idx < levels_.size() ? levels_[idx] : empty_;
}

std::size_t ProlongationTower::dim(int k) const { return level(k).basis.size(); }

std::size_t ProlongationTower::tensor_size(int k) const { return k < -1 ? 0 : power(W_.dim(), k + 2); }

const std::vector<SparseVector>& ProlongationTower::basis(int k) const { return level(k).basis; }

Parity ProlongationTower::parity(int k, std::size_t b) const { return level(k).parity.at(b); }

CochainSpace ProlongationTower::cochains(std::size_t j, int k) const { return CochainSpace(W_, j, level(k).parity); }

SparseMatrix ProlongationTower::delta_components(std::size_t j, int k) const {
  const Level& lv = level(k);
  const PowerBasis source(W_, j, superlin::PowerKind::Exterior);
  const PowerBasis target(W_, j + 1, superlin::PowerKind::Exterior);
  const std::size_t m = lv.basis.size();
  const std::size_t ts = tensor_size(k - 1);
  SparseBuilder out(target.size() * ts, source.size() * m);
  if (ts == 0) return out.build();

  std::vector<std::size_t> rest(j);
  for (std::size_t J = 0; J < target.size(); ++J) {
    const std::size_t* u = target.tuple(J);
    for (std::size_t i = 0; i <= j; ++i) {
      bool odd_after = false;
      for (std::size_t t = i + 1; t <= j; ++t) odd_after ^= is_odd(W_.parity(u[t]));
      int sign = (j - i) % 2 == 0 ? 1 : -1;
      if (odd_after && is_odd(W_.parity(u[i]))) sign = -sign;
      for (std::size_t t = 0, r = 0; t <= j; ++t)
        if (t != i) rest[r++] = u[t];
      const long I = source.find(rest.data());
      if (I < 0) continue;
      for (std::size_t b = 0; b < m; ++b)
        for (const auto& e : slice(lv.basis[b], u[i] * ts, ts))
          out.add(J * ts + e.index, static_cast<std::size_t>(I) * m + b, sign * e.value);
    }
  }
  return out.build();
}

SparseMatrix ProlongationTower::delta(std::size_t j, int k) const {
  SparseMatrix comps = delta_components(j, k);
  if (k - 1 == -1 || comps.rows() == 0) return comps;
  const Level& lower = level(k - 1);
  const std::size_t ts = tensor_size(k - 1);
  const std::size_t m = lower.basis.size();
  const std::size_t blocks = comps.rows() / ts;
  const LinearSolver solver(ts, lower.basis);
  std::vector<SparseVector> cols(comps.cols());
  for (std::size_t c = 0; c < comps.cols(); ++c) {
    const SparseVector& col = comps.column(c);
    for (std::size_t J = 0; J < blocks; ++J) {
      const SparseVector piece = slice(col, J * ts, ts);
      if (piece.empty()) continue;
      const auto x = solver.solve(piece);
      if (!x) throw ConsistencyError("delta leaves the lower prolongation");
      for (std::size_t b = 0; b < m; ++b)
        if (sgn((*x)[b]) != 0) cols[c].push_back({J * m + b, (*x)[b]});
    }
  }
  return SparseMatrix::from_columns(blocks * m, std::move(cols));
}

Subspace ProlongationTower::prolongation_subspace(int k) const {
  if (k < 1) throw DimensionError("prolongation_subspace: k must be >= 1");
  const Level& lv = level(k);
  if (static_cast<std::size_t>(k + 1) >= levels_.size()) return Subspace(W_.dim() * dim(k - 1));
  return lv.kernel;
}

bool ProlongationTower::is_supersymmetric(int k) const {
  const std::size_t n = W_.dim();
  const Level& lv = level(k);
  const auto args = static_cast<std::size_t>(k) + 1;
  for (const auto& y : lv.basis)
    for (std::size_t s = 0; s + 1 < args; ++s) {
      // digit of slot s has weight n^(args - s)
      const std::size_t wa = power(n, static_cast<int>(args - s));
      const std::size_t wb = wa / n;
      for (const auto& e : y) {
        const std::size_t a = (e.index / wa) % n;
        const std::size_t b = (e.index / wb) % n;
        const std::size_t swapped = e.index - a * wa - b * wb + b * wa + a * wb;
        Scalar expect = e.value;
        if (is_odd(W_.parity(a)) && is_odd(W_.parity(b))) expect = -expect;
        if (exact::entry(y, swapped) != expect) return false;
      }
    }
  return true;
}

Cohomology spencer_cohomology(const ProlongationTower& tower, int i, bool with_basis) {
  if (i < 0) throw DimensionError("spencer_cohomology: i must be >= 0");
  Cohomology h;
  h.i = i;
  if (tower.dim(i - 1) == 0) {
    if (with_basis) h.basis.emplace();
    return h;
  }
  const SparseMatrix out = tower.delta_components(2, i - 1);
  const SparseMatrix in = tower.delta_components(1, i);
  h.cochain_dim = out.cols();
  h.rank_out = exact::rank(out);
  h.rank_in = in.cols() ? exact::rank(in) : 0;
  h.dim = h.cochain_dim - h.rank_out - h.rank_in;
  if (with_basis) {
    const Subspace ker = exact::kernel_basis(out);
    Subspace acc = Subspace::column_span(tower.delta(1, i));
    std::vector<SparseVector> reps;
    for (const auto& v : ker.basis_vectors()) {
      if (acc.contains(v)) continue;
      acc = acc.sum(Subspace::span(acc.ambient_dim(), std::vector<SparseVector>{v}));
      reps.push_back(v);
    }
    if (reps.size() != h.dim) throw ConsistencyError("cohomology basis size disagrees with rank count");
    h.basis = std::move(reps);
  }
  return h;
}

}  // namespace sgtc::spencer
