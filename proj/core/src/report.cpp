// SPDX-License-Identifier: Apache-2.0
#include "optheory/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "optheory/version.hpp"

namespace optheory {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.informational || c.passed;
  });
}

nlohmann::ordered_json Report::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = command;
  j["theory"] = theory;
  j["tol"] = tol;
  if (seed) j["seed"] = *seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.informational ? "informational" : (c.passed ? "pass" : "fail");
    cj["residual"] = c.residual;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["passed"] = passed();
  for (const auto& [key, value] : extra.items()) j[key] = value;
  if (include_timings) {
    nlohmann::ordered_json tj;
    for (const auto& [name, ms] : timings_ms) tj[name] = ms;
    j["timings"] = std::move(tj);
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "theory:  " << theory << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", tol);
  out << "tol:     " << buf << "\n";
  if (seed) out << "seed:    " << *seed << "\n";
  for (const auto& c : checks) {
    const char* verdict = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    std::snprintf(buf, sizeof(buf), "%.6g", c.residual);
    out << "[" << verdict << "] " << c.name << "  residual=" << buf;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (!extra.empty()) out << extra.dump(2) << "\n";
  out << (passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace optheory
