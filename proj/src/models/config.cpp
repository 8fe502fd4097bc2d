#include "sgtc/error.hpp"
#include "sgtc/models/models.hpp"
#include "sgtc/superlie/algebra.hpp"

namespace sgtc::models {

using exact::Scalar;
using nlohmann::json;

namespace {

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

std::size_t count(const json& j, const std::string& ptr, std::size_t min) {
  if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min))
    throw SchemaError("expected an integer >= " + std::to_string(min), ptr);
  return j.get<std::size_t>();
}

Scalar rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return exact::parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError("expected an integer or a rational string \"p/q\"", ptr);
}

Matrix matrix(const json& j, const std::string& ptr, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix", ptr);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& r = j[i];
    if (!r.is_array() || r.size() != cols)
      throw SchemaError("expected a row of length " + std::to_string(cols), at(ptr, i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational(r[k], at(at(ptr, i), k));
  }
  return m;
}

std::vector<Matrix> matrices(const json& j, const std::string& ptr, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw SchemaError("expected an array of matrices", ptr);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(matrix(j[k], at(ptr, k), rows, cols));
  return out;
}

clifford::SpinorModule parse_module(const json& j, const std::string& ptr, std::size_t pp, std::size_t pm,
                                    std::size_t q) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "full"))
    return clifford::full_module(clifford::build_clifford(pp, pm, q));
  if (!j.is_array() || j.empty()) throw SchemaError("expected \"full\" or a list of \"+\" / \"-\"", ptr);
  const auto cd = clifford::build_clifford(pp, pm);
  std::vector<clifford::SpinorModule> parts;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& c = j[k];
    if (!c.is_string() || (c != "+" && c != "-")) throw SchemaError("expected \"+\" or \"-\"", at(ptr, k));
    parts.push_back(clifford::chiral_module(cd, c == "+" ? clifford::Chirality::Plus : clifford::Chirality::Minus));
  }
  clifford::SpinorModule m = clifford::module_sum(parts);
  if (m.dim != q) throw SchemaError("chiral summands have total dimension " + std::to_string(m.dim) + " but q = " +
                                        std::to_string(q), ptr);
  return m;
}

InternalSymmetry parse_k(const json& j, const std::string& ptr, std::size_t q) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  for (const auto& [key, _] : j.items())
    if (key != "labels" && key != "action" && key != "structure_constants")
      throw SchemaError("unknown key \"" + key + "\"", at(ptr, key));
  if (!j.contains("action")) throw SchemaError("missing \"action\"", ptr);
  InternalSymmetry K;
  K.action = matrices(j["action"], at(ptr, "action"), q, q);
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array() || l.size() != K.action.size())
      throw SchemaError("expected one label per action matrix", at(ptr, "labels"));
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) throw SchemaError("expected a string", at(at(ptr, "labels"), k));
      K.labels.push_back(l[k].get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < K.action.size(); ++k) K.labels.push_back("K" + std::to_string(k + 1));
  }
  if (j.contains("structure_constants")) {
    const SuperVectorSpace carrier(K.labels, std::vector<superlin::Parity>(K.labels.size(), superlin::Parity::Even));
    const auto alg = superlie::constants_from_json(carrier, j["structure_constants"], at(ptr, "structure_constants"));
    for (std::size_t a = 0; a < K.action.size(); ++a)
      for (std::size_t b = 0; b < K.action.size(); ++b) {
        Matrix expect(q, q);
        for (const auto& e : alg.bracket(a, b)) expect += e.value * K.action[e.index];
        if (!(exact::commutator(K.action[a], K.action[b]) == expect))
          throw SchemaError("structure constants disagree with the action matrices for (" + std::to_string(a) +
                                ", " + std::to_string(b) + ")",
                            at(ptr, "structure_constants"));
      }
  }
  return K;
}

}  // namespace

GStructureModel model_from_json(const json& config) {
  if (!config.is_object()) throw SchemaError("expected an object", "");
  for (const auto& [key, _] : config.items())
    if (key != "name" && key != "signature" && key != "q" && key != "module" && key != "S_choice" && key != "K")
      throw SchemaError("unknown key \"" + key + "\"", "/" + key);
  for (const char* key : {"signature", "q", "S_choice"})
    if (!config.contains(key)) throw SchemaError(std::string("missing \"") + key + "\"", "");

  std::string name = "config";
  if (config.contains("name")) {
    if (!config["name"].is_string()) throw SchemaError("expected a string", "/name");
    name = config["name"].get<std::string>();
  }
  const json& sig = config["signature"];
  if (!sig.is_array() || sig.size() != 2) throw SchemaError("expected [p+, p-]", "/signature");
  const std::size_t pp = count(sig[0], "/signature/0", 0);
  const std::size_t pm = count(sig[1], "/signature/1", 0);
  const std::size_t q = count(config["q"], "/q", 1);
  const std::size_t p = pp + pm;
  if (p == 0) throw SchemaError("signature must have p+ + p- >= 1", "/signature");

  const clifford::SpinorModule module =
      parse_module(config.contains("module") ? config["module"] : json(), "/module", pp, pm, q);

  std::optional<InternalSymmetry> K;
  if (config.contains("K")) K = parse_k(config["K"], "/K", q);

  const json& sc = config["S_choice"];
  SChoice s = SChoice::Custom;
  std::vector<Matrix> S;
  if (sc.is_string()) {
    const auto tag = parse_s_choice(sc.get<std::string>());
    if (!tag) throw SchemaError("unknown S choice \"" + sc.get<std::string>() + "\"", "/S_choice");
    s = *tag;
    if (s == SChoice::Full) S = superlie::full_odd_block(p, q);
    if (s == SChoice::ZType || s == SChoice::Traceless) {
      if (pp != 2 || pm != 1 || q != 2) throw SchemaError("z_type and traceless need signature [2, 1] and q = 2", "/S_choice");
      const SVariants v = s_variants_3d();
      S = s == SChoice::ZType ? v.z_type : v.traceless;
    }
  } else {
    S = matrices(sc, "/S_choice", q, p);
  }
  return build_model(name, module, s, std::move(S), K);
}

}  // namespace sgtc::models
