// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Runs the ten acceptance checks and prints one PASS/FAIL line per check.
#include <cstdio>

#include "selftest.hpp"

int main() {
  using namespace liepowers::selftest;
  int failures = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    CheckResult r = run_criterion(id);
    if (!r.passed) ++failures;
    std::printf("%s criterion %d: %s [%s, %.2fs]\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", kCriteria - failures, kCriteria);
  return failures == 0 ? 0 : 1;
}
