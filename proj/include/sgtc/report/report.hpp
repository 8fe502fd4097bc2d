#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sgtc/models/models.hpp"

namespace sgtc::report {

inline constexpr const char* kEngineVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Dimensions {
  std::size_t W_even = 0, W_odd = 0;
  std::size_t g = 0;
  std::size_t hom_W_g = 0;
  std::size_t hom_L2W_W = 0;
  std::size_t g1 = 0;
  std::size_t im_delta = 0;
  std::size_t h02 = 0;
  std::size_t h12 = 0;
  std::size_t stabilizer = 0;
};

struct Report {
  std::string model;
  std::string s_choice;
  std::optional<std::size_t> K_dim;
  std::string K_note;
  Dimensions dims;
  bool action_trivial = false;
  bool T0_flat = false;
  std::string flatness_test;
  bool stabilizer_contains_spin = false;
  std::vector<std::pair<std::string, double>> timing_ms;

  // Rank-nullity and the H^{0,2} count.
  bool consistent() const;
};

Report compute_report(const models::GStructureModel& m);

// timing is emitted only when asked for, so the remaining bytes stay deterministic
Json to_json(const Report& r, bool timing = false);
std::string to_markdown(const Report& r, bool timing = false);

struct TableRow {
  models::TheoryRow row;
  Report report;
};
// progress(name) is called once a row is done; rows run concurrently, output order is table order.
std::vector<TableRow> compute_table(const std::function<void(const std::string&)>& progress = {});
Json table_json(const std::vector<TableRow>& rows);
std::string table_markdown(const std::vector<TableRow>& rows);

struct Assertion {
  std::string suite;
  std::string id;
  bool pass = false;
  std::string detail;
};
// Suites: jacobi, clifford, spencer, ambiguity, cartan, all. Throws std::invalid_argument on an unknown name.
std::vector<Assertion> run_checks(const std::string& suite,
                                  const std::function<void(const std::string&)>& progress = {});
const std::vector<std::string>& check_suites();
Json checks_json(const std::vector<Assertion>& results);
std::string checks_markdown(const std::vector<Assertion>& results);

}  // namespace sgtc::report
