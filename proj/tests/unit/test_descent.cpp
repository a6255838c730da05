// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include <random>

#include "liepowers/descent.hpp"

using namespace liepowers;

namespace {
// The element X^nu built directly in the group algebra from the permutations with Des inside S(nu).
template <class Ring>
GroupAlgebraElement<Ring> descent_sum(int r, std::uint32_t mask, Ring ring) {
  GroupAlgebraElement<Ring> g(r, ring);
  for (const auto& perm : descent_class_members(r, mask)) g.add_term(perm, ring.one());
  return g;
}

DescentElement random_element(int r, std::uint32_t p, std::mt19937& rng) {
  FpRing ring{p};
  DescentElement e(r, ring);
  for (std::uint32_t m = 0; m < e.size(); ++m) e.set(m, ring.from_int(rng() % p));
  return e;
}
}  // namespace

TEST_CASE("permutation ranks round trip") {
  for (int r = 1; r <= 5; ++r)
    for (std::uint64_t k = 0; k < factorial(r); ++k) CHECK(permutation_rank(permutation_unrank(k, r)) == k);
  CHECK(descent_mask({2, 0, 1}) == 1u);
  CHECK(compose({1, 0, 2}, {0, 2, 1}) == Permutation{2, 0, 1});
}

TEST_CASE("composition of permutations matches their place actions") {
  PrimeField f(5);
  Tensor t = Tensor::word(3, parse_word("1232"), f);
  Permutation s{1, 3, 0, 2}, u{2, 0, 3, 1};
  CHECK(act_on_tensor(compose(s, u), t) == act_on_tensor(s, act_on_tensor(u, t)));
}

TEST_CASE("structure constants agree with the group algebra") {
  for (int r = 1; r <= 5; ++r) {
    const std::uint32_t size = 1u << (r - 1);
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b) {
        RationalRing q;
        auto lhs = GroupAlgebraElement<RationalRing>::from_descent(RationalDescentElement::basis(r, a, q) *
                                                                  RationalDescentElement::basis(r, b, q));
        CHECK(lhs == descent_sum(r, a, q) * descent_sum(r, b, q));
        FpRing f3{3};
        auto lhs3 = GroupAlgebraElement<FpRing>::from_descent(DescentElement::basis(r, a, f3) *
                                                             DescentElement::basis(r, b, f3));
        CHECK(lhs3 == descent_sum(r, a, f3) * descent_sum(r, b, f3));
      }
  }
}

TEST_CASE("descent algebra is associative and c is multiplicative") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto a = random_element(6, 3, rng), b = random_element(6, 3, rng), c = random_element(6, 3, rng);
    CHECK((a * b) * c == a * (b * c));
  }
  for (int r = 2; r <= 5; ++r)
    for (std::uint32_t p : {2u, 3u})
      for (int i = 0; i < 10; ++i) {
        auto a = random_element(r, p, rng), b = random_element(r, p, rng);
        auto ca = c_map(a), cb = c_map(b), cab = c_map(a * b);
        for (std::size_t k = 0; k < ca.size(); ++k) CHECK(cab[k] == (ca[k] * cb[k]) % p);
      }
}

TEST_CASE("idempotents in small degree") {
  auto f2 = lift_idempotents(2, 2);
  REQUIRE(f2.idempotents.size() == 1);
  CHECK(f2.idempotents[0] == DescentElement::basis(make_composition({2}), FpRing{2}));

  auto f3 = lift_idempotents(2, 3);
  REQUIRE(f3.idempotents.size() == 2);
  FpRing ring{3};
  const auto& e11 = f3.of_class(make_partition({1, 1}));
  CHECK(e11 == DescentElement::basis(make_composition({1, 1}), ring).scaled(2));
  CHECK(f3.of_class(make_partition({2})) == DescentElement::one(2, ring) - e11);
}

TEST_CASE("lifted idempotents are complete orthogonal families") {
  for (int r = 1; r <= 6; ++r)
    for (int p : {2, 3}) {
      auto fam = lift_idempotents(r, p);
      CHECK(fam.idempotents.size() == fam.classes.size());
      CHECK(check_idempotents(fam).ok());
      CHECK(c_map_kernel_dim(r, p) == (std::size_t(1) << (r - 1)) - fam.classes.size());
    }
}

TEST_CASE("action on products of Lie elements") {
  PrimeField f(2);
  // nu = (1,2) on b1 b2 with b1 of degree 2 and b2 of degree 1 gives b2 b1.
  Tensor b1 = lyndon_bracket(parse_word("12"), 2, f);
  Tensor b2 = Tensor::word(2, parse_word("1"), f);
  Tensor lhs = act_on_tensor(DescentElement::basis(make_composition({1, 2}), FpRing{2}), product(b1, b2));
  CHECK(lhs == product(b2, b1));
  CHECK(gr_action_check(make_composition({1, 2}), {b1, b2}));

  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField g(p);
    for (int r = 2; r <= 5; ++r)
      for (std::uint32_t m = 0; m < (1u << (r - 1)); ++m) {
        Composition mu = composition_from_mask(r, std::uint32_t(rng()) & ((1u << (r - 1)) - 1));
        std::vector<Tensor> factors;
        for (int d : mu.parts) {
          auto basis = lyndon_basis(2, d, g);
          Tensor t(2, d, g);
          for (const auto& b : basis) t.add_scaled(b, std::uint8_t(rng() % p));
          factors.push_back(t);
        }
        CHECK(gr_action_check(composition_from_mask(r, m), factors));
      }
  }
  CHECK_THROWS_AS(gr_action_check(make_composition({2}), {Tensor::word(2, parse_word("12"), f)}), PreconditionError);
}

TEST_CASE("inflated action matches the action in the larger algebra") {
  PrimeField f(3);
  FpRing ring{3};
  Tensor a = lyndon_bracket(parse_word("12"), 2, f), b = lyndon_bracket(parse_word("1122"), 2, f);
  auto e = DescentElement::basis(make_composition({1, 2}), ring);
  Tensor direct = act_on_lie_product(DescentElement::basis(make_composition({2, 4}), ring), 1, {a, b});
  CHECK(act_on_lie_product(e, 2, {a, b}) == direct);
}

TEST_CASE("descent element text round trip") {
  auto fam = lift_idempotents(4, 3);
  for (const auto& e : fam.idempotents) CHECK(parse_descent_element(serialize(e), 4, 3) == e);
  CHECK_THROWS_AS(parse_descent_element("1 2,1\n", 4, 3), PreconditionError);
}
