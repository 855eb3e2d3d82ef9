// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace brt {

/// One measured quantity against its pinned tolerance.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0: no runtime budget

  bool passed() const;
};

enum class VerifyLevel { quick, full };

struct VerifyConfig {
  VerifyLevel level = VerifyLevel::full;
  std::uint64_t seed = 0xB3A1;
  unsigned threads = 0;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;
  double wall_time = 0.0;

  bool passed() const;
  /// Serialises to the documented report schema (docs/verify_report.schema.json).
  std::string to_json(int indent = 2) const;
};

/// A named acceptance criterion or invariant suite.
struct SuiteDefinition {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<Check>(const VerifyConfig&)> run;
};

/// The eight acceptance criteria, in order.
std::vector<SuiteDefinition> acceptance_suites();

/// Invariant and property suites beyond the acceptance criteria.
std::vector<SuiteDefinition> invariant_suites();

/// Runs one suite, timing it and appending the runtime-budget check.
SuiteResult run_suite(const SuiteDefinition& suite, const VerifyConfig& config);

/// Invariant suites followed by the acceptance criteria.
VerificationReport run_verification(const VerifyConfig& config);

}  // namespace brt
