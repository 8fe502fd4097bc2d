#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgtc/error.hpp"
#include "sgtc/report/report.hpp"
#include "sgtc/spencer/ambiguity.hpp"
#include "sgtc/spencer/cartan.hpp"
#include "sgtc/spencer/complex.hpp"
#include "sgtc/superlie/graded.hpp"
#include "sgtc/superlie/group_data.hpp"

namespace sgtc::report {

namespace {

using models::GStructureModel;

class Suite {
 public:
  Suite(std::string name, std::vector<Assertion>& out) : name_(std::move(name)), out_(out) {}

  void expect(const std::string& id, bool pass, const std::string& detail = "") {
    out_.push_back({name_, id, pass, pass ? "" : detail});
  }
  template <class T>
  void equal(const std::string& id, const T& got, const T& want) {
    std::ostringstream os;
    os << "got " << got << ", expected " << want;
    expect(id, got == want, os.str());
  }
  // Runs body, turning an escaping sgtc error into a failed assertion.
  template <class F>
  void guard(const std::string& id, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(id, false, e.what());
    }
  }

 private:
  std::string name_;
  std::vector<Assertion>& out_;
};

void jacobi_suite(std::vector<Assertion>& out) {
  Suite s("jacobi", out);
  for (const auto& row : models::catalog()) {
    const std::string name = models::row_name(row);
    s.guard(name + ".algebra", [&] {
      const auto m = models::build_row_model(row);
      const auto v = superlie::validate(m.g.algebra());
      s.expect(name + ".algebra", v.ok(), v.summary());
      s.expect(name + ".brackets_match_matrices", m.g.brackets_match_matrices());
      if (!models::is_extended(row)) {
        const auto gd = superlie::super_poincare_group_data(*m.module, name);
        const auto w = superlie::validate_group_data(gd);
        s.expect(name + ".super_poincare", w.ok(), w.summary());
      }
    });
  }
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}}) {
    const std::string pq = std::to_string(p) + "_" + std::to_string(q);
    const auto gl = superlie::validate_group_data(superlie::gl_group_data(p, q));
    s.expect("gl" + pq + ".group_data", gl.ok(), gl.summary());
    const auto osp = superlie::validate_group_data(superlie::osp_group_data(p, q));
    s.expect("osp" + std::to_string(p) + "_" + std::to_string(2 * q) + ".group_data", osp.ok(), osp.summary());
  }
  const auto ga = superlie::build_superconformal_3d();
  const auto gr = superlie::validate_grading(ga);
  s.expect("superconformal_3d.grading", gr.ok(), gr.summary());
  const auto alg = superlie::validate(ga.base.algebra());
  s.expect("superconformal_3d.algebra", alg.ok(), alg.summary());
}

void clifford_suite(std::vector<Assertion>& out) {
  Suite s("clifford", out);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& row : models::catalog()) {
    const auto sig = std::make_pair(row.p_plus, row.p_minus);
    if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
    seen.push_back(sig);
    const std::string name = "cl" + std::to_string(row.p_plus) + "_" + std::to_string(row.p_minus);
    s.guard(name, [&] {
      const auto cd = clifford::build_clifford(row.p_plus, row.p_minus);
      const auto v = clifford::verify(cd);
      s.expect(name + ".relations", v.clifford_relations);
      s.expect(name + ".charge_conjugation", v.charge_conjugation, "alpha = " + std::to_string(cd.alpha));
      s.expect(name + ".c_transpose", v.c_transpose, "alpha = " + std::to_string(cd.alpha));
      s.expect(name + ".intertwining", clifford::verify_intertwining(cd, clifford::spin_generators(cd)));
    });
  }
  for (const auto& row : models::catalog()) {
    const std::string name = models::row_name(row);
    s.guard(name + ".spin_annihilates_T0", [&] {
      const auto m = models::build_row_model(row);
      const auto data = spencer::spencer_delta(m.g);
      const auto t0 = exact::to_sparse(superlin::hom_flatten(m.T0, data.hom_l2w));
      std::size_t bad = m.spin_dim;
      for (std::size_t k = 0; k < m.spin_dim && bad == m.spin_dim; ++k)
        if (!spencer::torsion_action(data, k).apply(t0).empty()) bad = k;
      s.expect(name + ".spin_annihilates_T0", bad == m.spin_dim,
               bad < m.spin_dim ? "moved by " + m.g.label(bad) : "");
    });
  }
}

void spencer_suite(std::vector<Assertion>& out) {
  Suite s("spencer", out);
  const auto d3 = models::build_row_model(models::catalog()[6]);
  const auto data = spencer::spencer_delta(d3.g);
  s.equal("d3n1.dim_W", d3.W.dim(), std::size_t{5});
  s.equal("d3n1.dim_g", d3.g.dim(), std::size_t{9});
  s.equal("d3n1.hom_W_g", data.hom_wg.flattened_dim(), std::size_t{45});
  s.equal("d3n1.hom_L2W_W", data.hom_l2w.flattened_dim(), std::size_t{60});
  s.equal("d3n1.g1", data.g1.dim(), std::size_t{12});
  s.equal("d3n1.im_delta", data.im_delta.dim(), std::size_t{33});
  s.equal("d3n1.h02", data.h02_dim, std::size_t{27});
  const auto stab = spencer::stabilizer(data, d3.T0);
  s.equal("d3n1.stabilizer_dim", stab.dim(), std::size_t{3});
  s.expect("d3n1.stabilizer_is_spin", stab.dim() == 3 && stab.contains(d3.spin_subspace()));

  const spencer::ProlongationTower tower(d3.g, 2);
  s.equal("d3n1.g2", tower.dim(2), std::size_t{20});
  s.equal("d3n1.h12", spencer::spencer_cohomology(tower, 1).dim, std::size_t{6});
  s.equal("d3n1.h22", spencer::spencer_cohomology(tower, 2).dim, std::size_t{0});
  s.expect("d3n1.g1_supersymmetric", tower.is_supersymmetric(1));
  {
    // delta(1,1) followed by delta(2,0)
    const auto first = tower.delta(1, 1);
    const auto second = tower.delta(2, 0);
    bool zero = true;
    for (const auto& c : first.columns()) zero = zero && second.apply(c).empty();
    s.expect("d3n1.delta_squared", zero);
  }

  for (const auto& row : models::catalog()) {
    const std::string name = models::row_name(row);
    s.guard(name + ".report", [&] {
      const auto m = models::build_row_model(row);
      const Report r = compute_report(m);
      std::ostringstream os;
      os << "Hom(W,g) " << r.dims.hom_W_g << ", g1 " << r.dims.g1 << ", Im " << r.dims.im_delta << ", Hom(L2W,W) "
         << r.dims.hom_L2W_W << ", H02 " << r.dims.h02;
      s.expect(name + ".rank_nullity", r.consistent(), os.str());
      s.expect(name + ".stabilizer_contains_spin", r.stabilizer_contains_spin);
      s.expect(name + ".h02_action_descends", true);
    });
  }

  for (std::size_t n = 2; n <= 5; ++n) {
    const std::string name = "O" + std::to_string(n);
    const auto m = models::classical_models(n).orthogonal;
    const auto d = spencer::spencer_delta(m.g);
    s.equal(name + ".g1", d.g1.dim(), std::size_t{0});
    s.equal(name + ".h02", d.h02_dim, std::size_t{0});
  }
  {
    const spencer::ProlongationTower o3(models::classical_models(3).orthogonal.g, 2);
    s.equal("O3.h12", spencer::spencer_cohomology(o3, 1).dim, std::size_t{6});
    s.equal("O3.h22", spencer::spencer_cohomology(o3, 2).dim, std::size_t{0});
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::string name = "U" + std::to_string(n);
    const auto d = spencer::spencer_delta(models::classical_models(n).unitary.g);
    s.equal(name + ".g1", d.g1.dim(), std::size_t{0});
    s.equal(name + ".h02", d.h02_dim, n == 1 ? std::size_t{0} : std::size_t{8});
    s.guard(name + ".h02_action_descends", [&] {
      spencer::induced_h02_action(d);
      s.expect(name + ".h02_action_descends", true);
    });
  }
}

void ambiguity_suite(std::vector<Assertion>& out) {
  Suite s("ambiguity", out);
  const auto d3 = models::build_row_model(models::catalog()[6]);
  const auto data = spencer::spencer_delta(d3.g);
  s.guard("d3n1", [&] {
    const auto r = spencer::connection_ambiguity_check_3d(data, d3.T0);
    s.equal("symmetric_dim", r.symmetric_dim, std::size_t{12});
    s.equal("image_dim", r.image_dim, std::size_t{12});
    s.expect("image_is_g1", r.image_is_g1);
    s.expect("draws", r.draws >= 100, "draws = " + std::to_string(r.draws));
    s.equal("symmetric_zero", r.symmetric_zero, r.draws);
    s.equal("asymmetric_moved", r.asymmetric_moved, r.draws);
  });
}

void cartan_suite(std::vector<Assertion>& out) {
  Suite s("cartan", out);
  s.guard("superconformal_3d", [&] {
    const auto ga = superlie::build_superconformal_3d();
    const std::vector<std::size_t> dims = {ga.dim(-2), ga.dim(-1), ga.dim(0), ga.dim(1), ga.dim(2)};
    s.expect("degree_dims", dims == std::vector<std::size_t>{3, 2, 4, 2, 3});
    const auto A = spencer::cartan_adjustment_map(ga);
    s.equal("domain_dim", A.domain_dim, std::size_t{25});
    s.equal("kernel_dim", A.kernel_dim, std::size_t{0});
  });
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = {"jacobi", "clifford", "spencer", "ambiguity", "cartan", "all"};
  return names;
}

std::vector<Assertion> run_checks(const std::string& suite, const std::function<void(const std::string&)>& progress) {
  const std::vector<std::pair<std::string, void (*)(std::vector<Assertion>&)>> suites = {
      {"jacobi", jacobi_suite},
      {"clifford", clifford_suite},
      {"spencer", spencer_suite},
      {"ambiguity", ambiguity_suite},
      {"cartan", cartan_suite},
  };
  std::vector<Assertion> out;
  bool found = false;
  for (const auto& [name, run] : suites) {
    if (suite != "all" && suite != name) continue;
    found = true;
    if (progress) progress(name);
    run(out);
  }
  if (!found) throw std::invalid_argument("unknown check suite \"" + suite + "\"");
  return out;
}

Json checks_json(const std::vector<Assertion>& results) {
  Json arr = Json::array();
  std::size_t failed = 0;
  for (const auto& a : results) {
    Json j{{"suite", a.suite}, {"id", a.id}, {"pass", a.pass}};
    if (!a.pass) {
      j["detail"] = a.detail;
      ++failed;
    }
    arr.push_back(j);
  }
  return Json{{"passed", results.size() - failed},
              {"failed", failed},
              {"assertions", arr},
              {"engine_version", kEngineVersion}};
}

std::string checks_markdown(const std::vector<Assertion>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  os << "| suite | assertion | result |\n|---|---|---|\n";
  for (const auto& a : results) {
    os << "| " << a.suite << " | " << a.id << " | " << (a.pass ? "pass" : "FAIL");
    if (!a.pass) {
      ++failed;
      if (!a.detail.empty()) os << ": " << a.detail;
    }
    os << " |\n";
  }
  os << "\n" << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace sgtc::report
