// One PASS/FAIL line per acceptance criterion. Usage: acceptance [path/to/sgtc]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/brute_force.hpp"
#include "json.hpp"
#include "sgtc/clifford/clifford.hpp"
#include "sgtc/exact/subspace.hpp"
#include "sgtc/spencer/ambiguity.hpp"
#include "sgtc/spencer/cartan.hpp"
#include "sgtc/spencer/complex.hpp"
#include "sgtc/superlie/graded.hpp"
#include "sgtc/superlie/group_data.hpp"

namespace {

using sgtc::exact::Matrix;
using sgtc::exact::SparseVector;
using sgtc::exact::Subspace;
namespace sp = sgtc::spencer;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << what << "; ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  status = pclose(pipe.release());
  return out;
}

const sgtc::models::GStructureModel& d3() {
  static const auto m = *sgtc::models::builtin_model("d3n1");
  return m;
}
const sp::SpencerComplexData& d3_data() {
  static const auto d = sp::spencer_delta(d3().g);
  return d;
}

void c1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& m = d3();
  const auto d = sp::spencer_delta(m.g);
  const double s = seconds_since(t0);
  o.require(m.W.dim() == 5, "dim V = " + std::to_string(m.W.dim()));
  o.require(m.g.dim() == 9, "dim g = " + std::to_string(m.g.dim()));
  o.require(d.hom_wg.flattened_dim() == 45, "Hom(V,g) = " + std::to_string(d.hom_wg.flattened_dim()));
  o.require(d.hom_l2w.flattened_dim() == 60, "Hom(L2V,V) = " + std::to_string(d.hom_l2w.flattened_dim()));
  o.require(d.g1.dim() == 12, "g1 = " + std::to_string(d.g1.dim()));
  o.require(d.im_delta.dim() == 33, "Im delta = " + std::to_string(d.im_delta.dim()));
  o.require(d.h02_dim == 27, "H02 = " + std::to_string(d.h02_dim));
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
}

void c2(Outcome& o) {
  const auto action = sp::induced_h02_action(d3_data());
  o.require(action.matrices.size() == 9, std::to_string(action.matrices.size()) + " action matrices");
  std::size_t nonzero = 0;
  std::vector<std::string> moved;
  std::vector<SparseVector> rows;
  std::size_t spin_invariants = 0;
  for (std::size_t k = 0; k < action.matrices.size(); ++k) {
    if (k == d3().spin_dim) spin_invariants = d3_data().h02_dim - Subspace::span(d3_data().h02_dim, rows).dim();
    const Matrix& A = action.matrices[k];
    if (!A.is_zero()) {
      ++nonzero;
      moved.push_back(d3().g.label(k));
    }
    for (std::size_t r = 0; r < A.rows(); ++r) {
      SparseVector row;
      for (std::size_t c = 0; c < A.cols(); ++c)
        if (sgn(A(r, c)) != 0) row.push_back({c, A(r, c)});
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  const std::size_t invariants =
      d3_data().h02_dim - Subspace::span(d3_data().h02_dim, std::move(rows)).dim();
  std::string who;
  for (const auto& l : moved) who += (who.empty() ? "" : ",") + l;
  o.require(nonzero == 0, std::to_string(nonzero) + " of 9 matrices nonzero (" + who + "), invariant subspace dim " +
                              std::to_string(invariants) + " of " + std::to_string(d3_data().h02_dim) +
                              " (spin-invariant " + std::to_string(spin_invariants) + ")");
}

void c3(Outcome& o) {
  const Subspace stab = sp::stabilizer(d3_data(), d3().T0);
  const Subspace spin = d3().spin_subspace();
  o.require(stab.dim() == 3, "stabilizer dim " + std::to_string(stab.dim()));
  o.require(spin.dim() == 3 && stab.contains(spin) && spin.contains(stab), "stabilizer differs from spin(2,1)");
}

void c4(Outcome& o) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = sp::spencer_delta(sgtc::models::classical_models(n).orthogonal.g);
    o.require(d.g1.dim() == 0 && d.h02_dim == 0, "O(" + std::to_string(n) + "): g1 " + std::to_string(d.g1.dim()) +
                                                     ", H02 " + std::to_string(d.h02_dim));
  }
  const auto u1 = sp::spencer_delta(sgtc::models::classical_models(1).unitary.g);
  o.require(u1.g1.dim() == 0 && u1.h02_dim == 0,
            "U(1): g1 " + std::to_string(u1.g1.dim()) + ", H02 " + std::to_string(u1.h02_dim));
  const auto u2m = sgtc::models::classical_models(2).unitary;
  const auto u2 = sp::spencer_delta(u2m.g);
  const std::size_t oracle_h02 =
      u2.hom_l2w.flattened_dim() - sgtc::exact::reference::rank(oracle::brute_force_delta(u2m.W, u2m.g.matrices()));
  o.require(oracle_h02 == 8, "U(2) oracle H02 " + std::to_string(oracle_h02));
  o.require(u2.g1.dim() == 0 && u2.h02_dim == 8,
            "U(2): g1 " + std::to_string(u2.g1.dim()) + ", H02 " + std::to_string(u2.h02_dim));
}

void c5(Outcome& o) {
  const std::size_t riemann = 3 * 3 * (3 * 3 - 1) / 12;
  const sp::ProlongationTower t(d3().g, 2);
  const auto h1 = sp::spencer_cohomology(t, 1).dim, h2 = sp::spencer_cohomology(t, 2).dim;
  o.require(h1 == riemann && h2 == 0, "3d: H12 " + std::to_string(h1) + ", H22 " + std::to_string(h2));
  const sp::ProlongationTower o3(sgtc::models::classical_models(3).orthogonal.g, 2);
  const auto k1 = sp::spencer_cohomology(o3, 1).dim, k2 = sp::spencer_cohomology(o3, 2).dim;
  o.require(k1 == riemann && k2 == 0, "O(3): H12 " + std::to_string(k1) + ", H22 " + std::to_string(k2));
}

void c6(Outcome& o) {
  const auto r = sp::connection_ambiguity_check_3d(d3_data(), d3().T0, 100);
  o.require(r.symmetric_dim == 12, "symmetric U dim " + std::to_string(r.symmetric_dim));
  o.require(r.image_dim == 12 && r.image_is_g1, "image dim " + std::to_string(r.image_dim));
  o.require(r.draws >= 100 && r.symmetric_zero == r.draws, std::to_string(r.symmetric_zero) + " of " +
                                                               std::to_string(r.draws) + " symmetric draws unchanged");
  o.require(r.asymmetric_moved == r.draws,
            std::to_string(r.asymmetric_moved) + " of " + std::to_string(r.draws) + " asymmetric draws moved");
}

void c7(Outcome& o) {
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}}) {
    const auto gl = sgtc::superlie::validate_group_data(sgtc::superlie::gl_group_data(p, q));
    o.require(gl.ok(), "GL: " + gl.summary());
    const auto osp = sgtc::superlie::validate_group_data(sgtc::superlie::osp_group_data(p, q));
    o.require(osp.ok(), "OSp: " + osp.summary());
  }
  std::size_t rows = 0;
  for (const auto& row : sgtc::models::catalog()) {
    if (sgtc::models::is_extended(row)) continue;
    ++rows;
    const auto gd = sgtc::superlie::super_poincare_group_data(sgtc::models::row_module(row),
                                                              sgtc::models::row_name(row));
    const auto v = sgtc::superlie::validate_group_data(gd);
    o.require(v.ok(), sgtc::models::row_name(row) + ": " + v.summary());
  }
  o.require(rows == 4, std::to_string(rows) + " N = 1 rows");
}

void c8(Outcome& o) {
  for (const auto& row : sgtc::models::catalog()) {
    const std::string name = sgtc::models::row_name(row);
    const auto m = *sgtc::models::builtin_model(name);
    const auto& cd = m.module->clifford;
    const auto v = sgtc::clifford::verify(cd);
    o.require(v.ok(), name + ": Clifford data");
    o.require(sgtc::clifford::verify_intertwining(cd, sgtc::clifford::spin_generators(cd)), name + ": intertwining");
    const auto data = sp::spencer_delta(m.g);
    const SparseVector t0 = sgtc::exact::to_sparse(sgtc::superlin::hom_flatten(m.T0, data.hom_l2w));
    for (std::size_t k = 0; k < m.spin_dim; ++k)
      o.require(sp::torsion_action(data, k).apply(t0).empty(), name + ": " + m.g.label(k) + " moves T0");
  }
}

void c9(Outcome& o) {
  const auto A = sp::cartan_adjustment_map(sgtc::superlie::build_superconformal_3d());
  o.require(A.domain_dim == 25, "domain dim " + std::to_string(A.domain_dim));
  o.require(A.kernel_dim == 0, "kernel dim " + std::to_string(A.kernel_dim));
}

void c10(Outcome& o, const std::string& cli) {
  // Reference rows: p, p+, p-, q, N.
  const std::vector<std::array<std::string, 5>> expected = {
      {"1", "1", "0", "1", "1"},     {"2", "1", "1", "1", "(1,0)"}, {"2", "1", "1", "2", "(1,1)"},
      {"2", "1", "1", "2", "(2,0)"}, {"2", "1", "1", "3", "(2,1)"}, {"2", "2", "0", "4", "(2,2)"},
      {"3", "2", "1", "2", "1"},     {"4", "3", "1", "4", "1"},     {"4", "4", "0", "8", "2"},
      {"6", "5", "1", "8", "1"},
  };
  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  const std::string md = run(cli + " table --format md 2>/dev/null", status);
  const double s = seconds_since(t0);
  o.require(status == 0, "table exit status " + std::to_string(status));
  std::istringstream in(md);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; std::getline(in, line); ++k) {
    if (k < 2 || line.empty()) continue;  // header and separator
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, '|');
    while (std::getline(ls, cell, '|')) {
      const auto b = cell.find_first_not_of(' '), e = cell.find_last_not_of(' ');
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    rows.push_back(cells);
  }
  o.require(rows.size() == expected.size(), std::to_string(rows.size()) + " data rows");
  for (std::size_t r = 0; r < rows.size() && r < expected.size(); ++r)
    for (std::size_t c = 0; c < 5; ++c)
      o.require(rows[r].size() > c && rows[r][c] == expected[r][c], "row " + std::to_string(r + 1) + " column " +
                                                                     std::to_string(c + 1));

  const std::string js = run(cli + " table --format json 2>/dev/null", status);
  const auto j = nlohmann::json::parse(js, nullptr, false);
  o.require(j.is_array() && j.size() == expected.size(), "json table shape");
  if (j.is_array()) {
    for (const auto& row : j) {
      if (row["N"] != "1") continue;
      for (const char* key : {"dim_g", "hom_W_g", "hom_L2W_W", "g1", "im_delta", "h02", "h12", "stabilizer"})
        o.require(row.contains(key) && row[key].is_number_unsigned(), row["model"].dump() + " lacks " + key);
      o.require(row["hom_W_g"] == row["g1"].get<std::size_t>() + row["im_delta"].get<std::size_t>(),
                row["model"].dump() + " rank-nullity");
    }
    for (const auto& row : j)
      if (row["model"] == "d3n1") o.require(row["h02"] == 27, "d3n1 h02 " + row["h02"].dump());
  }
  o.require(s < 60.0, "table took " + std::to_string(s) + " s");
}

void c11(Outcome& o) {
  const auto models = oracle::small_models();
  o.require(models.size() >= 15, std::to_string(models.size()) + " small models");
  for (const auto& m : models) {
    const auto d = sp::spencer_delta(m.g);
    o.require(d.delta.to_dense() == oracle::brute_force_delta(m.W, m.g.matrices()), m.name + " differs");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "sgtc";
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "3d dimension block", c1},
      {2, "trivial action on H02", c2},
      {3, "stabilizer of T0 is spin", c3},
      {4, "classical comparators", c4},
      {5, "higher obstructions", c5},
      {6, "connection ambiguity", c6},
      {7, "super Lie group data", c7},
      {8, "Clifford suite", c8},
      {9, "Cartan uniqueness", c9},
      {10, "table reproduction", [&](Outcome& o) { c10(o, cli); }},
      {11, "oracle equivalence of delta", c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::string detail = o.detail.str();
    if (detail.size() >= 2) detail.resize(detail.size() - 2);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
              << (o.pass ? "" : " -- " + detail) << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
