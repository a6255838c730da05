// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <string>

#include <json.hpp>

#include "liepowers/decompose.hpp"

namespace liepowers::report {

using json = nlohmann::ordered_json;

/* Every report has the shape
     {config: {p, n, r, k, max_degree}, results: [...], certificates: [...],
      totals: {checks, passed}, timing_ms}
   with unused config fields set to null. */
json dims_report(int p, int n, int r);
json pclasses_report(int p, int r);
json filtration_report(const FiltrationReport& rep, double timing_ms);
json decomposition_report(const DecompositionResult& result);
// Report for `certify`: the re-derived certificates of a decomposition report.
json certification_report(const json& decomposition, const std::vector<Certificate>& certs, double timing_ms);

// Rebuilds the B bases and projections of a decomposition report.
// Malformed input raises PreconditionError.
DecompositionResult decomposition_from_json(const json& report);

json certificate_json(const Certificate& c);
bool all_passed(const json& report);

std::string to_csv(const json& report);
std::string to_text(const json& report);

}  // namespace liepowers::report
