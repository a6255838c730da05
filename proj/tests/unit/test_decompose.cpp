// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include "liepowers/decompose.hpp"

using namespace liepowers;

namespace {
const ClassSummand& class_with(const FiltrationReport& rep, const Partition& member) {
  for (const auto& c : rep.classes)
    if (std::find(c.cls.members.begin(), c.cls.members.end(), member) != c.cls.members.end()) return c;
  throw std::logic_error("no class");
}

std::vector<std::size_t> b_dims(const DecompositionResult& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.degrees) out.push_back(d.b.dim());
  return out;
}

bool all_passed(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (!c.passed) return false;
  return !certs.empty();
}
}  // namespace

TEST_CASE("splitting T^2 over F_2 gives a single class with chain 4, 1, 0") {
  auto rep = split_tensor_power(2, 2, 2);
  REQUIRE(rep.classes.size() == 1);
  CHECK(rep.classes[0].chain_dims == std::vector<std::size_t>{4, 1, 0});
  CHECK(rep.classes[0].pbw_images_basis);
}

TEST_CASE("splitting T^4 over F_2 and T^2 over F_3") {
  auto rep = split_tensor_power(2, 4, 2);
  REQUIRE(rep.classes.size() == 2);
  CHECK(class_with(rep, make_partition({1, 1, 1, 1})).summand.dim() == 12);
  CHECK(class_with(rep, make_partition({3, 1})).summand.dim() == 4);

  auto rep3 = split_tensor_power(2, 2, 3);
  REQUIRE(rep3.classes.size() == 2);
  CHECK(class_with(rep3, make_partition({1, 1})).summand.dim() == 3);
  CHECK(class_with(rep3, make_partition({2})).summand.dim() == 1);
}

TEST_CASE("summand dimensions add up and chains match higher Lie dimensions") {
  for (int p : {2, 3})
    for (int r = 1; r <= 6; ++r) {
      auto rep = split_tensor_power(2, r, p);
      std::size_t total = 0;
      for (const auto& c : rep.classes) {
        total += c.summand.dim();
        std::size_t expected = 0;
        for (auto d : c.expected_factor_dims) expected += d;
        CHECK(c.summand.dim() == expected);
        CHECK(c.pbw_images_basis);
      }
      CHECK(total == power(2, r));
    }
}

TEST_CASE("split_tensor_power rejects oversized inputs") {
  CHECK_THROWS_AS(split_tensor_power(10, 5, 2), PreconditionError);
}

TEST_CASE("B family for p = 2, k = 3, n = 2 up to degree 9") {
  auto r = construct_B_family(2, 2, 3, 9);
  CHECK(b_dims(r) == std::vector<std::size_t>{2, 8, 54});
  CHECK(all_passed(r.certificates));
  CHECK(all_passed(certify_decomposition(r)));
  const DegreeResult* d9 = r.at_degree(9);
  REQUIRE(d9);
  CHECK(d9->u.dim() == 16);
  CHECK(d9->lower.dim() == 18);
}

TEST_CASE("B family for p = 3, k = 2 puts all of L^6 in B_6") {
  auto r = construct_B_family(2, 3, 2, 6);
  CHECK(b_dims(r) == std::vector<std::size_t>{1, 3, 9});
  CHECK(r.at_degree(6)->lie.dim() == 9);
  CHECK(all_passed(r.certificates));
  REQUIRE(r.at_degree(6)->complement_data);
  const auto& cd = *r.at_degree(6)->complement_data;
  CHECK(cd.u_prime.dim() == 1);
  CHECK(cd.class_dim == 10);
  CHECK(cd.ok());
}

TEST_CASE("k = 1 leaves only B_1 = V") {
  auto r = construct_B_family(2, 5, 1, 5);
  CHECK(b_dims(r) == std::vector<std::size_t>{2, 0, 0, 0, 0});
  CHECK(all_passed(r.certificates));
}

TEST_CASE("modified PBW data at degree 6 for p = 2, k = 3") {
  auto r = construct_B_family(2, 2, 3, 3);
  ComplementData cd = canonical_complement(6, 3, 2, 2, r.degrees);
  CHECK(cd.genuine_idempotent);
  CHECK(cd.intersection_ok);
  CHECK(cd.u_prime.dim() == 4);
  CHECK(cd.c.dim() == 1);
  CHECK(cd.phi_rank == 12);
  CHECK(cd.ok());
}

TEST_CASE("B family truncates from n = 3 to n = 2") {
  auto big = construct_B_family(3, 2, 3, 6);
  auto small = construct_B_family(2, 2, 3, 6);
  auto certs = check_truncation(big, small);
  CHECK(certs.size() == 2);
  CHECK(all_passed(certs));
}

TEST_CASE("tampered B fails re-certification") {
  auto r = construct_B_family(2, 2, 3, 6);
  REQUIRE(all_passed(certify_decomposition(r)));
  DegreeResult& d6 = r.degrees[1];
  // Replace B_6 by a one-dimensional subspace outside L^6.
  d6.b = TensorSubspace::span(2, 6, {Tensor::word(2, parse_word("111111"), PrimeField(2))}, PrimeField(2));
  CHECK_FALSE(all_passed(certify_decomposition(r)));
}

TEST_CASE("Dynkin retraction is an equivariant projection onto L") {
  PrimeField f(3);
  TensorSubspace lie = lie_power(2, 4, f);
  Matrix r = dynkin_retraction(2, 4, lie);
  Projection pi{Subspace::full(16, f), lie.space, r};
  CHECK(verify_projection(induce_on_tensor_power(gl_generators(2, 3), 4).action, pi).ok());
  CHECK_THROWS_AS(dynkin_retraction(2, 3, lie_power(2, 3, f)), PreconditionError);
}

TEST_CASE("construct_B_family validates its inputs") {
  CHECK_THROWS_AS(construct_B_family(2, 4, 3, 6), PreconditionError);
  CHECK_THROWS_AS(construct_B_family(2, 3, 3, 6), PreconditionError);
  CHECK_THROWS_AS(construct_B_family(2, 2, 3, 14), PreconditionError);
}
