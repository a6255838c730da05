// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// liepowers: dimension tables, p-classes, filtration splittings, B-family
// decompositions and their certificates.
//
// Exit codes: 0 everything verified, 1 a mathematical check failed,
// 2 usage or cap error, 3 complement search exhausted.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"
#include "selftest.hpp"

namespace {

using liepowers::report::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kExhausted = 3 };

struct Options {
  int p = 2, n = 2, r = 1, k = 1;
  int max_degree = 0;
  int max_search = 8;
  std::string format = "json";
  std::string out;
  std::string level = "quick";
  std::string input;
};

int emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kUsage;
  }
  f << text;
  return kOk;
}

int emit_report(const json& report, const Options& o) {
  std::string text;
  if (o.format == "csv")
    text = liepowers::report::to_csv(report);
  else if (o.format == "text")
    text = liepowers::report::to_text(report);
  else
    text = report.dump(2) + "\n";
  int rc = emit(text, o);
  if (rc != kOk) return rc;
  if (!liepowers::report::all_passed(report)) {
    for (const auto& c : report.at("certificates"))
      if (c.at("status") != "pass")
        std::cerr << "failed: " << c.at("kind").get<std::string>() << " at " << c.at("degree_or_class").get<std::string>()
                  << ": " << c.at("detail").get<std::string>() << "\n";
    return kFailed;
  }
  return kOk;
}

int run_selftest(const Options& o) {
  using namespace liepowers::selftest;
  const Level level = o.level == "full" ? Level::Full : Level::Quick;
  auto results = run(level, threads_from_env());
  bool ok = true;
  json rows = json::array();
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    text += std::string(r.passed ? "PASS" : "FAIL") + " " + (r.id ? "criterion " + std::to_string(r.id) + ": " : "") +
            r.title + " [" + r.detail + ", " + secs + "]\n";
  }
  if (o.format == "json")
    emit(json{{"level", o.level}, {"results", rows}}.dump(2) + "\n", o);
  else
    emit(text, o);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie powers of the natural module for GL(n, p): tables, splittings and certified decompositions"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "Write the report to this file");
  };

  auto* dims = app.add_subcommand("dims", "Witt and higher Lie dimensions with PBW factor checks");
  dims->add_option("--p", o.p, "Prime")->required();
  dims->add_option("--n", o.n, "Rank of V")->required();
  dims->add_option("--r", o.r, "Degree")->required();
  add_common(dims);

  auto* pcl = app.add_subcommand("pclasses", "p-equivalence classes of partitions of r");
  pcl->add_option("--p", o.p, "Prime")->required();
  pcl->add_option("--r", o.r, "Degree")->required();
  add_common(pcl);

  auto* filt = app.add_subcommand("filtration", "Split T^r(V) by the lifted descent idempotents");
  filt->add_option("--p", o.p, "Prime")->required();
  filt->add_option("--n", o.n, "Rank of V")->required();
  filt->add_option("--r", o.r, "Degree")->required();
  add_common(filt);

  auto* dec = app.add_subcommand("decompose", "Construct and certify B_k, B_2k, ... up to max-degree");
  dec->add_option("--p", o.p, "Prime")->required();
  dec->add_option("--n", o.n, "Rank of V")->required();
  dec->add_option("--k", o.k, "Degree step, not divisible by p")->required();
  dec->add_option("--max-degree", o.max_degree, "Largest degree")->required();
  dec->add_option("--max-search", o.max_search, "Randomized complement attempts per degree")->check(CLI::NonNegativeNumber);
  add_common(dec);

  auto* cert = app.add_subcommand("certify", "Re-check a decomposition report");
  cert->add_option("file", o.input, "JSON report written by decompose")->required();
  add_common(cert);

  auto* self = app.add_subcommand("selftest", "Run the built-in checks");
  self->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  self->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  self->add_option("--out", o.out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (self->parsed() && !self->count("--format")) o.format = "text";

  try {
    if (dims->parsed()) return emit_report(liepowers::report::dims_report(o.p, o.n, o.r), o);
    if (pcl->parsed()) return emit_report(liepowers::report::pclasses_report(o.p, o.r), o);
    if (filt->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      auto rep = liepowers::split_tensor_power(o.n, o.r, o.p);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return emit_report(liepowers::report::filtration_report(rep, ms), o);
    }
    if (dec->parsed()) {
      liepowers::DecompositionOptions opts;
      opts.max_search = o.max_search;
      auto result = liepowers::construct_B_family(o.n, o.p, o.k, o.max_degree, opts);
      return emit_report(liepowers::report::decomposition_report(result), o);
    }
    if (cert->parsed()) {
      std::ifstream in(o.input);
      if (!in) {
        std::cerr << "error: cannot read " << o.input << "\n";
        return kUsage;
      }
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        std::cerr << "error: " << o.input << " is not valid JSON: " << e.what() << "\n";
        return kUsage;
      }
      const auto start = std::chrono::steady_clock::now();
      auto result = liepowers::report::decomposition_from_json(doc);
      auto certs = liepowers::certify_decomposition(result);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return emit_report(liepowers::report::certification_report(doc, certs, ms), o);
    }
    if (self->parsed()) return run_selftest(o);
  } catch (const liepowers::SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const liepowers::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const liepowers::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: problem too large: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
