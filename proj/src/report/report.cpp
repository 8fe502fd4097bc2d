#include "sgtc/report/report.hpp"

#include <chrono>
#include <sstream>

#include "sgtc/spencer/complex.hpp"

namespace sgtc::report {

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

bool Report::consistent() const {
  return dims.hom_W_g == dims.g1 + dims.im_delta && dims.hom_L2W_W == dims.h02 + dims.im_delta &&
         dims.hom_W_g == (dims.W_even + dims.W_odd) * dims.g && dims.stabilizer <= dims.g;
}

Report compute_report(const models::GStructureModel& m) {
  Report r;
  r.model = m.name;
  r.s_choice = models::to_string(m.s_choice);
  if (m.K) r.K_dim = m.K->action.size();
  r.K_note = m.K_note;

  Stopwatch sw;
  const auto data = spencer::spencer_delta(m.g);
  r.timing_ms.emplace_back("delta", sw.lap());
  const auto stab = spencer::stabilizer(data, m.T0);
  r.stabilizer_contains_spin = stab.contains(m.spin_subspace());
  r.timing_ms.emplace_back("stabilizer", sw.lap());
  const auto h1 = spencer::spencer_cohomology(data, 1);
  r.timing_ms.emplace_back("h12", sw.lap());
  const auto action = spencer::induced_h02_action(data);
  const auto flat = spencer::first_order_flat(data, action, m.T0, m.T0);
  r.timing_ms.emplace_back("h02_action", sw.lap());

  r.dims = {m.W.even_dim(),
            m.W.odd_dim(),
            m.g.dim(),
            data.hom_wg.flattened_dim(),
            data.hom_l2w.flattened_dim(),
            data.g1.dim(),
            data.im_delta.dim(),
            data.h02_dim,
            h1.dim,
            stab.dim()};
  r.action_trivial = action.trivial;
  r.T0_flat = flat.flat;
  r.flatness_test = flat.test;
  return r;
}

Json to_json(const Report& r, bool timing) {
  Json j;
  j["model"] = r.model;
  j["s_choice"] = r.s_choice;
  if (r.K_dim) {
    Json k;
    k["dim"] = *r.K_dim;
    if (!r.K_note.empty()) k["note"] = r.K_note;
    j["K"] = k;
  }
  const auto& d = r.dims;
  j["dims"] = Json{{"W_even", d.W_even}, {"W_odd", d.W_odd}, {"g", d.g},       {"hom_W_g", d.hom_W_g},
                   {"hom_L2W_W", d.hom_L2W_W}, {"g1", d.g1}, {"im_delta", d.im_delta}, {"h02", d.h02},
                   {"h12", d.h12},       {"stabilizer", d.stabilizer}};
  j["flags"] = Json{{"action_trivial", r.action_trivial},
                    {"stabilizer_contains_spin", r.stabilizer_contains_spin},
                    {"first_order_flat_T0", r.T0_flat},
                    {"flatness_test", r.flatness_test}};
  if (timing) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timing_ms) t[k] = v;
    j["timing_ms"] = t;
  }
  j["engine_version"] = kEngineVersion;
  return j;
}

std::string to_markdown(const Report& r, bool timing) {
  const auto& d = r.dims;
  std::ostringstream os;
  os << "# " << r.model << "\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| W | R^{" << d.W_even << "|" << d.W_odd << "} |\n";
  os << "| S choice | " << r.s_choice << " |\n";
  if (r.K_dim) os << "| dim K | " << *r.K_dim << (r.K_note.empty() ? "" : " (" + r.K_note + ")") << " |\n";
  os << "| dim g | " << d.g << " |\n";
  os << "| dim Hom(W,g) | " << d.hom_W_g << " |\n";
  os << "| dim Hom(Λ²W,W) | " << d.hom_L2W_W << " |\n";
  os << "| dim g^(1) | " << d.g1 << " |\n";
  os << "| dim Im δ | " << d.im_delta << " |\n";
  os << "| dim H^{0,2} | " << d.h02 << " |\n";
  os << "| dim H^{1,2} | " << d.h12 << " |\n";
  os << "| dim stabilizer of T0 | " << d.stabilizer << " |\n";
  os << "| stabilizer contains spin | " << yes_no(r.stabilizer_contains_spin) << " |\n";
  os << "| G acts trivially on H^{0,2} | " << yes_no(r.action_trivial) << " |\n";
  os << "| T0 first-order flat | " << yes_no(r.T0_flat) << " (" << r.flatness_test << ") |\n";
  if (timing)
    for (const auto& [k, v] : r.timing_ms) os << "| time " << k << " (ms) | " << v << " |\n";
  os << "\nengine " << kEngineVersion << "\n";
  return os.str();
}

std::vector<TableRow> compute_table(const std::function<void(const std::string&)>& progress) {
  const auto& rows = models::catalog();
  std::vector<TableRow> out(rows.size());
  const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i].row = rows[i];
    out[i].report = compute_report(models::build_row_model(rows[i]));
    if (progress) {
#pragma omp critical(sgtc_progress)
      progress(models::row_name(rows[i]));
    }
  }
  return out;
}

Json table_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& t : rows) {
    const auto& d = t.report.dims;
    Json j;
    j["p"] = t.row.p;
    j["p_plus"] = t.row.p_plus;
    j["p_minus"] = t.row.p_minus;
    j["q"] = t.row.q;
    j["N"] = t.row.N;
    j["model"] = t.report.model;
    j["dim_g"] = d.g;
    j["hom_W_g"] = d.hom_W_g;
    j["hom_L2W_W"] = d.hom_L2W_W;
    j["g1"] = d.g1;
    j["im_delta"] = d.im_delta;
    j["h02"] = d.h02;
    j["h12"] = d.h12;
    j["stabilizer"] = d.stabilizer;
    j["action_trivial"] = t.report.action_trivial;
    j["K_dim"] = t.report.K_dim.value_or(0);
    j["K_note"] = t.report.K_note;
    arr.push_back(j);
  }
  return arr;
}

std::string table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| p | p+ | p- | q | N | dim g | Hom(W,g) | Hom(Λ²W,W) | g^(1) | Im δ | H^{0,2} | H^{1,2} | stab(T0) | "
        "trivial action | K |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& t : rows) {
    const auto& d = t.report.dims;
    os << "| " << t.row.p << " | " << t.row.p_plus << " | " << t.row.p_minus << " | " << t.row.q << " | " << t.row.N
       << " | " << d.g << " | " << d.hom_W_g << " | " << d.hom_L2W_W << " | " << d.g1 << " | " << d.im_delta << " | "
       << d.h02 << " | " << d.h12 << " | " << d.stabilizer << " | " << yes_no(t.report.action_trivial) << " | ";
    if (t.report.K_dim)
      os << *t.report.K_dim << " (" << t.report.K_note << ")";
    else
      os << "-";
    os << " |\n";
  }
  return os.str();
}

}  // namespace sgtc::report
