#pragma once

// Reproduction suites: each check compares a predicted claim with a measured
// value under a fixed tolerance.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace frl::verify {

enum class Suite { Quick, Paper, Full };

struct Check {
  int criterion = 0;  // acceptance criterion number, 0 for supplementary checks
  std::string claim;
  std::string predicted;
  std::string measured;
  std::string tolerance;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* first_failure() const;
};

Suite suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

/// Runs a suite. Timing rows report only the verdict against their budget so
/// that repeated runs produce identical reports. Progress lines go to `log`.
Report run(Suite s, std::ostream* log = nullptr);

void print_table(std::ostream& os, const Report& r);
void to_json(nlohmann::json& j, const Report& r);

}  // namespace frl::verify
