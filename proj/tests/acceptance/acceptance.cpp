// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion, followed by the individual
// checks. Exit status is nonzero if any criterion fails.
//
//   acceptance [--quick] [--seed N] [--threads N] [--only AC5]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "monte_carlo.hpp"
#include "verification.hpp"

int main(int argc, char** argv) {
  brt::VerifyConfig config;
  config.seed = brt::kDefaultSeed;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      config.level = brt::VerifyLevel::quick;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      config.seed = std::strtoull(argv[++i], nullptr, 0);
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      config.threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--seed N] [--threads N] [--only ID]\n", argv[0]);
      return 3;
    }
  }

  int failed = 0;
  for (const auto& suite : brt::acceptance_suites()) {
    if (!only.empty() && suite.id != only) continue;
    const brt::SuiteResult r = brt::run_suite(suite, config);
    std::printf("%s %s: %s (%.2fs)\n", r.passed() ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                r.seconds);
    for (const auto& c : r.checks) {
      std::printf("    [%s] %s: measured %.6g, tolerance %.3g%s%s\n", c.passed ? "ok" : "FAIL",
                  c.name.c_str(), c.measured, c.tolerance, c.detail.empty() ? "" : "  ",
                  c.detail.c_str());
    }
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  }
  std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
