// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <string>
#include <vector>

namespace liepowers::selftest {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

enum class Level { Quick, Full };

// Quick: the small worked examples (r <= 4).  Full: the ten acceptance checks.
std::vector<CheckResult> run(Level level, int threads = 1);

std::vector<CheckResult> run_quick();
CheckResult run_criterion(int id);
constexpr int kCriteria = 10;

// Worker count from LIEPOWERS_THREADS, at least 1.
int threads_from_env();

}  // namespace liepowers::selftest
