// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace optheory {

/// One named check: verdict plus the worst residual observed. Informational
/// checks carry measured values but never affect the overall verdict or the
/// process exit code.
struct CheckRecord {
  std::string name;
  bool passed = true;
  bool informational = false;
  double residual = 0.0;
  std::string detail;
};

/// Machine- and human-readable result of one CLI command. The JSON form is
/// stable-ordered; two runs with the same command and seed serialize to
/// identical bytes once the timings block is excluded.
struct Report {
  std::string command;
  std::string theory;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, double>> timings_ms;

  void add(CheckRecord record) { checks.push_back(std::move(record)); }
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  nlohmann::ordered_json to_json(bool include_timings = true) const;
  std::string to_text() const;
};

}  // namespace optheory
