#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgtc/error.hpp"
#include "sgtc/exact/elimination.hpp"
#include "sgtc/report/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailure = 1;
constexpr int kInputError = 2;

void apply_thread_limit() {
  const char* env = std::getenv("SGTC_THREADS");
  if (!env || !*env) return;
  try {
    const int n = std::stoi(env);
    if (n > 0) sgtc::exact::set_max_threads(n);
  } catch (const std::exception&) {
    std::cerr << "sgtc: ignoring SGTC_THREADS=" << env << "\n";
  }
}

void progress(const std::string& what) { std::cerr << "done " << what << "\n"; }

sgtc::models::GStructureModel load_model(const std::string& builtin, std::size_t n, const std::string& config) {
  if (!builtin.empty()) {
    auto m = sgtc::models::builtin_model(builtin, n);
    if (!m) {
      std::string names;
      for (const auto& b : sgtc::models::builtin_names()) names += " " + b;
      throw sgtc::ValidationError("unknown builtin model \"" + builtin + "\"; known:" + names);
    }
    return *m;
  }
  std::ifstream in(config);
  if (!in) throw sgtc::ValidationError("cannot open " + config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw sgtc::SchemaError(std::string("invalid JSON: ") + e.what(), "");
  }
  return sgtc::models::model_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Spencer cohomology of G-structures on super vector spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sgtc::report::kEngineVersion);

  std::string format = "md";
  const auto formats = CLI::IsMember({"md", "json"});

  auto* table = app.add_subcommand("table", "theory table with computed dimensions");
  table->add_option("--format", format, "md or json")->check(formats);

  std::string builtin, config;
  std::size_t n = 3;
  bool timing = false;
  auto* report = app.add_subcommand("report", "dimension report for one model");
  auto* opt_builtin = report->add_option("--builtin", builtin, "builtin model name");
  auto* opt_config = report->add_option("--config", config, "model config JSON file");
  opt_builtin->excludes(opt_config);
  report->add_option("--n", n, "size for the on / un models")->check(CLI::Range(1, 16));
  report->add_option("--format", format, "md or json")->check(formats);
  report->add_flag("--timing", timing, "include per-phase timings");

  std::string suite;
  auto* check = app.add_subcommand("check", "run a check suite");
  check->add_option("suite", suite, "jacobi, clifford, spencer, ambiguity, cartan or all")
      ->required()
      ->check(CLI::IsMember(sgtc::report::check_suites()));
  check->add_option("--format", format, "md or json")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  apply_thread_limit();

  try {
    if (*table) {
      const auto rows = sgtc::report::compute_table(progress);
      if (format == "json")
        std::cout << sgtc::report::table_json(rows).dump(2) << "\n";
      else
        std::cout << sgtc::report::table_markdown(rows);
      for (const auto& r : rows)
        if (!r.report.consistent()) return kAssertionFailure;
      return kOk;
    }
    if (*report) {
      if (builtin.empty() && config.empty()) {
        std::cerr << "sgtc report: one of --builtin or --config is required\n";
        return kInputError;
      }
      const auto m = load_model(builtin, n, config);
      const auto r = sgtc::report::compute_report(m);
      if (format == "json")
        std::cout << sgtc::report::to_json(r, timing).dump(2) << "\n";
      else
        std::cout << sgtc::report::to_markdown(r, timing);
      return r.consistent() ? kOk : kAssertionFailure;
    }
    const auto results = sgtc::report::run_checks(suite, progress);
    if (format == "json")
      std::cout << sgtc::report::checks_json(results).dump(2) << "\n";
    else
      std::cout << sgtc::report::checks_markdown(results);
    for (const auto& a : results)
      if (!a.pass) {
        std::cerr << "FAIL " << a.suite << "/" << a.id << ": " << a.detail << "\n";
        return kAssertionFailure;
      }
    return kOk;
  } catch (const sgtc::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const sgtc::InvarianceError& e) {
    std::cerr << "invariance error (generator " << e.generator() << "): " << e.what() << "\n";
  } catch (const sgtc::UnsupportedSignature& e) {
    std::cerr << "unsupported signature: " << e.what() << "\n";
  } catch (const sgtc::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const sgtc::DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const sgtc::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kAssertionFailure;
  }
  return kInputError;
}
