// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include "report.hpp"

using namespace liepowers;
using report::json;

TEST_CASE("decomposition reports round trip through certify") {
  auto result = construct_B_family(2, 2, 3, 6);
  json doc = report::decomposition_report(result);
  CHECK(doc.at("config").at("k") == 3);
  CHECK(doc.at("config").at("r").is_null());
  CHECK(report::all_passed(doc));
  CHECK(doc.at("results").size() == 2);
  CHECK(doc.at("results")[1].at("dim_b") == 8);
  CHECK(doc.at("results")[1].at("B")[0] == "2 2 6");

  // Through text, as the CLI does.
  json reread = json::parse(doc.dump());
  auto back = report::decomposition_from_json(reread);
  REQUIRE(back.degrees.size() == 2);
  CHECK(back.degrees[1].b == result.degrees[1].b);
  CHECK(back.degrees[1].projection.retraction == result.degrees[1].projection.retraction);
  auto certs = certify_decomposition(back);
  CHECK(report::all_passed(report::certification_report(reread, certs, 0)));

  // One flipped projection entry.
  std::string row = reread["results"][1]["projection"]["retraction"][5];
  row[0] = row[0] == '0' ? '1' : '0';
  reread["results"][1]["projection"]["retraction"][5] = row;
  auto bad = report::decomposition_from_json(reread);
  CHECK_FALSE(report::all_passed(report::certification_report(reread, certify_decomposition(bad), 0)));
}

TEST_CASE("malformed reports are rejected") {
  auto doc = report::decomposition_report(construct_B_family(2, 2, 3, 3));
  doc["results"][0]["projection"]["retraction"][0] = "2";
  CHECK_THROWS_AS(report::decomposition_from_json(doc), PreconditionError);
  json empty = json::object();
  CHECK_THROWS_AS(report::decomposition_from_json(empty), PreconditionError);
}

TEST_CASE("dimension tables and CSV") {
  json d = report::dims_report(2, 2, 4);
  CHECK(d.at("results").size() == 5);
  CHECK(report::all_passed(d));
  std::string csv = report::to_csv(d);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.rfind("partition,witt_dims,higher_lie_dim,pbw_factor_dim\n", 0) == 0);
  CHECK_THROWS_AS(report::dims_report(4, 2, 2), PreconditionError);
}

TEST_CASE("p-class table") {
  json c = report::pclasses_report(2, 4);
  CHECK(c.at("results").size() == 2);
  CHECK(report::all_passed(c));
}
