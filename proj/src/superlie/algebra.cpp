#include "sgtc/superlie/algebra.hpp"

#include <sstream>

#include "sgtc/error.hpp"

namespace sgtc::superlie {

using exact::axpy;
using superlin::koszul;

SuperLieAlgebra::SuperLieAlgebra(SuperVectorSpace carrier)
    : carrier_(std::move(carrier)), table_(carrier_.dim() * carrier_.dim()) {}

SuperLieAlgebra::SuperLieAlgebra(SuperVectorSpace carrier, const std::vector<StructureConstant>& constants)
    : SuperLieAlgebra(std::move(carrier)) {
  for (const auto& k : constants) {
    if (k.a >= dim() || k.b >= dim() || k.c >= dim()) throw DimensionError("structure constant index out of range");
    axpy(table_[k.a * dim() + k.b], Scalar(1), SparseVector{{k.c, k.value}});
  }
}

void SuperLieAlgebra::set_bracket(std::size_t a, std::size_t b, SparseVector value) {
  if (!value.empty() && value.back().index >= dim()) throw DimensionError("bracket value out of range");
  table_[a * dim() + b] = std::move(value);
}

SparseVector SuperLieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& ex : x)
    for (const auto& ey : y) axpy(out, ex.value * ey.value, bracket(ex.index, ey.index));
  return out;
}

exact::Matrix SuperLieAlgebra::ad(std::size_t a) const {
  exact::Matrix m(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b)
    for (const auto& e : bracket(a, b)) m(e.index, b) = e.value;
  return m;
}

std::vector<StructureConstant> SuperLieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (const auto& e : bracket(a, b)) out.push_back({a, b, e.index, e.value});
  return out;
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (auto v : other.violations) {
    if (!prefix.empty()) v.kind = prefix + "." + v.kind;
    violations.push_back(std::move(v));
  }
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.kind << " (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? "," : "") << v.indices[k];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string names(const SuperLieAlgebra& g, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : ", ") + g.carrier().label(i);
  return s;
}

}  // namespace

ValidationReport validate(const SuperLieAlgebra& g) {
  ValidationReport r;
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& e : g.bracket(a, b))
        if (g.parity(a) + g.parity(b) != g.parity(e.index))
          r.violations.push_back({"parity", {a, b, e.index}, "[" + names(g, {a, b}) + "] has a component on " +
                                                                 g.carrier().label(e.index)});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      SparseVector s = g.bracket(a, b);
      axpy(s, Scalar(koszul(g.parity(a), g.parity(b))), g.bracket(b, a));
      if (!s.empty()) r.violations.push_back({"antisymmetry", {a, b}, names(g, {a, b})});
    }
  const bool antisymmetric = r.ok();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = antisymmetric ? a : 0; b < n; ++b)
      for (std::size_t c = antisymmetric ? b : 0; c < n; ++c) {
        const Parity pa = g.parity(a), pb = g.parity(b), pc = g.parity(c);
        const SparseVector ea{{a, Scalar(1)}}, eb{{b, Scalar(1)}}, ec{{c, Scalar(1)}};
        SparseVector j;
        axpy(j, Scalar(koszul(pa, pc)), g.bracket(ea, g.bracket(b, c)));
        axpy(j, Scalar(koszul(pb, pa)), g.bracket(eb, g.bracket(c, a)));
        axpy(j, Scalar(koszul(pc, pb)), g.bracket(ec, g.bracket(a, b)));
        if (!j.empty()) r.violations.push_back({"jacobi", {a, b, c}, names(g, {a, b, c})});
      }
  return r;
}

nlohmann::json constants_to_json(const SuperLieAlgebra& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& k : g.constants()) arr.push_back({k.a, k.b, k.c, exact::to_string(k.value)});
  return arr;
}

SuperLieAlgebra constants_from_json(const SuperVectorSpace& carrier, const nlohmann::json& j,
                                    const std::string& pointer) {
  if (!j.is_array()) throw SchemaError("structure constants must be an array", pointer);
  std::vector<StructureConstant> ks;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = pointer + "/" + std::to_string(i);
    const auto& q = j[i];
    if (!q.is_array() || q.size() != 4) throw SchemaError("expected [a, b, c, value]", here);
    std::size_t idx[3];
    for (std::size_t k = 0; k < 3; ++k) {
      if (!q[k].is_number_integer() || q[k].get<long long>() < 0 || q[k].get<std::size_t>() >= carrier.dim())
        throw SchemaError("index must be an integer below " + std::to_string(carrier.dim()),
                          here + "/" + std::to_string(k));
      idx[k] = q[k].get<std::size_t>();
    }
    Scalar v;
    try {
      if (q[3].is_string()) v = exact::parse_scalar(q[3].get<std::string>());
      else if (q[3].is_number_integer()) v = Scalar(q[3].get<long>());
      else throw std::invalid_argument("not a rational");
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("bad rational: ") + e.what(), here + "/3");
    }
    ks.push_back({idx[0], idx[1], idx[2], v});
  }
  return SuperLieAlgebra(carrier, ks);
}

}  // namespace sgtc::superlie
