#include "doctest.h"
#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/models/models.hpp"
#include "sgtc/spencer/complex.hpp"

using namespace sgtc::models;
using nlohmann::json;

TEST_CASE("catalog rows") {
  const auto& rows = catalog();
  REQUIRE(rows.size() == 10);
  CHECK(rows[6] == TheoryRow{3, 2, 1, 2, "1"});
  for (const auto& r : rows) {
    CHECK(r.p == r.p_plus + r.p_minus);
    CHECK(r.q <= 8);
  }
  CHECK(row_name(rows[4]) == "d2n21");
  CHECK(row_name(rows[6]) == "d3n1");
}

TEST_CASE("every row builds and its stabilizer contains spin") {
  for (const auto& row : catalog()) {
    CAPTURE(row_name(row));
    const auto m = build_row_model(row);
    CHECK(m.W.even_dim() == row.p);
    CHECK(m.W.odd_dim() == row.q);
    CHECK(m.g.W() == m.W);
    CHECK(m.T0.parity() == sgtc::superlin::Parity::Even);
    CHECK(sgtc::superlie::validate(m.g.algebra()).ok());
    if (row.p <= 4) {
      const auto d = sgtc::spencer::spencer_delta(m.g);
      CHECK(sgtc::spencer::stabilizer(d, m.T0).contains(m.spin_subspace()));
    }
    CHECK(is_extended(row) == m.K.has_value());
  }
}

TEST_CASE("3d model variants") {
  const auto& d3 = catalog()[6];
  CHECK(build_model(d3, SChoice::Full).g.dim() == 9);
  CHECK(build_model(d3, SChoice::Zero).g.dim() == 3);
  CHECK(build_model(d3, SChoice::ZType).g.dim() == 5);
  CHECK(build_model(d3, SChoice::Traceless).g.dim() == 7);
  const auto d1 = build_model(catalog()[0], SChoice::Full);
  CHECK(d1.g.dim() == 1);
  CHECK(d1.spin_dim == 0);
  CHECK_THROWS_AS(build_model(catalog()[7], SChoice::ZType), sgtc::ValidationError);
  CHECK_THROWS_AS(build_model(catalog()[8], SChoice::Full), sgtc::ValidationError);
}

TEST_CASE("S variants decompose the full block") {
  const auto v = s_variants_3d();
  const auto full = matrix_span(v.full, 2, 3);
  const auto z = matrix_span(v.z_type, 2, 3);
  const auto t = matrix_span(v.traceless, 2, 3);
  CHECK(full.dim() == 6);
  CHECK(z.dim() == 2);
  CHECK(t.dim() == 4);
  CHECK(v.zero.empty());
  CHECK(z.intersection(t).dim() == 0);
  CHECK(z.sum(t) == full);
}

TEST_CASE("K preset of the extended rows") {
  const auto m = build_row_model(catalog()[3]);  // (2,0): two S+ copies
  REQUIRE(m.K);
  CHECK(m.K->action.size() == 1);
  CHECK(m.K_note == kPresetNote);
}

TEST_CASE("classical models") {
  const auto c2 = classical_models(2);
  CHECK(c2.orthogonal.g.dim() == 1);
  CHECK(c2.unitary.g.dim() == 4);
  for (const auto& X : c2.unitary.g.matrices()) CHECK(sgtc::exact::commutator(X, c2.J).is_zero());
  CHECK(classical_models(3).orthogonal.g.dim() == 3);
  CHECK(classical_models(1).unitary.g.dim() == 1);
}

TEST_CASE("superKahler n = 1") {
  const auto full = superkahler_model_n1(SuperKahlerS::Full);
  const auto cx = superkahler_model_n1(SuperKahlerS::ComplexLinear);
  CHECK(full.S.size() == 8);
  CHECK(cx.S.size() == 4);
  CHECK(full.g.dim() == 11);
  for (const auto* m : {&full, &cx}) {
    const auto d = sgtc::spencer::spencer_delta(m->g);
    CHECK(sgtc::spencer::stabilizer(d, m->T0).contains(m->spin_subspace()));
  }
}

TEST_CASE("model config documents") {
  const json ok = {{"name", "mine"}, {"signature", {2, 1}}, {"q", 2}, {"S_choice", "full"}};
  CHECK(model_from_json(ok).g.dim() == 9);
  json custom = ok;
  custom["S_choice"] = json::array({{{1, 0, 0}, {0, 0, 0}}});
  try {
    model_from_json(custom);
    FAIL("expected InvarianceError");
  } catch (const sgtc::InvarianceError& e) {
    CHECK(e.generator().rfind("sigma", 0) == 0);
  }
  auto pointer_of = [](const json& j) {
    try {
      model_from_json(j);
    } catch (const sgtc::SchemaError& e) {
      return e.pointer();
    }
    return std::string("none");
  };
  json bad = ok;
  bad["signature"] = {2, "x"};
  CHECK(pointer_of(bad) == "/signature/1");
  bad = ok;
  bad["S_choice"] = json::array({{{1, 0, "1/0x"}, {0, 0, 0}}});
  CHECK(pointer_of(bad) == "/S_choice/0/0/2");
  bad = ok;
  bad["extra"] = 1;
  CHECK(pointer_of(bad) == "/extra");
  bad = ok;
  bad["K"] = {{"action", {{{0, 1}, {-1, 0}}}}, {"structure_constants", {{0, 0, 0, "1"}}}};
  CHECK(pointer_of(bad) == "/K/structure_constants");
  bad["K"] = {{"action", {{{0, 1}, {-1, 0}}, {{1, 0}, {0, 1}}}},
              {"structure_constants", {{0, 1, 0, "1"}, {1, 0, 0, "-1"}}}};
  CHECK(pointer_of(bad) == "/K/structure_constants");
  json chiral = {{"signature", {1, 1}}, {"q", 2}, {"module", {"+", "-"}}, {"S_choice", "zero"}};
  CHECK(model_from_json(chiral).g.dim() == 1);
  json unsupported = {{"signature", {3, 0}}, {"q", 3}, {"S_choice", "zero"}};
  CHECK_THROWS_AS(model_from_json(unsupported), sgtc::UnsupportedSignature);
}

TEST_CASE("builtin names resolve") {
  for (const auto& n : builtin_names()) {
    if (n == "d6n1" || n == "d4n2") continue;
    CAPTURE(n);
    CHECK(builtin_model(n).has_value());
  }
  CHECK_FALSE(builtin_model("nope").has_value());
}
