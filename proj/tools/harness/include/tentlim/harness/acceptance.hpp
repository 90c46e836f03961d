#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tentlim/harness/config.hpp"

namespace tentlim::harness {

struct CheckResult {
  std::string id;     // sortable identifier, e.g. "acceptance.05"
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double budget = 0.0;  // seconds allowed; 0 means unbounded
  std::string detail;
};

struct Check {
  std::string id;
  std::string title;
  double budget = 0.0;
  // fills pass and detail; timing is added by the runner
  std::function<void(const RunConfig&, CheckResult&)> body;
};

// The eleven acceptance criteria, in order. They use the Fibonacci map regardless of the configured one.
const std::vector<Check>& acceptance_checks();

// Property checks run against the configured kneading map.
std::vector<Check> property_checks();

// Runs one check, catching exceptions into a failure and marking budget overruns as failures.
CheckResult run_check(const Check& check, const RunConfig& cfg);

struct SuiteReport {
  std::vector<CheckResult> results;  // sorted by id
  bool pass() const;
};

// Checks run on cfg.jobs threads; the report is sorted by id either way.
SuiteReport run_suite(const std::vector<Check>& checks, const RunConfig& cfg);

// include_timing = false gives byte-identical output for identical configurations
nlohmann::json to_json(const SuiteReport& r, bool include_timing);
std::string to_text(const SuiteReport& r);

}  // namespace tentlim::harness
