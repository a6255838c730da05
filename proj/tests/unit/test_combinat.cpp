// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "liepowers/combinat.hpp"
#include "liepowers/linalg.hpp"
#include "oracles.hpp"

using namespace liepowers;

namespace {
Partition P(std::vector<int> v) { return make_partition(std::move(v)); }
Composition C(std::vector<int> v) { return make_composition(std::move(v)); }

std::vector<std::vector<Partition>> class_members(int r, int p) {
  std::vector<std::vector<Partition>> out;
  for (const auto& c : p_equiv_classes(r, p)) {
    auto m = c.members;
    std::sort(m.begin(), m.end(), LexLess{});
    out.push_back(m);
  }
  return out;
}
}  // namespace

TEST_CASE("partitions come in increasing lexicographic order") {
  auto ps = partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front() == P({1, 1, 1, 1}));
  CHECK(ps.back() == P({4}));
  for (int r = 1; r <= 10; ++r) {
    auto all = partitions(r);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CHECK(lex_less(all[i], all[i + 1]));
      auto nx = next_partition(all[i]);
      REQUIRE(nx);
      CHECK(*nx == all[i + 1]);
    }
    CHECK_FALSE(next_partition(P({r})));
  }
}

TEST_CASE("compositions and masks") {
  for (int r = 1; r <= 9; ++r) {
    auto cs = compositions(r);
    CHECK(cs.size() == (std::size_t(1) << (r - 1)));
    for (const auto& c : cs) {
      CHECK(c.size() == r);
      CHECK(composition_from_mask(r, composition_mask(c)) == c);
    }
  }
  CHECK(associated_partition(C({1, 3, 2})) == P({3, 2, 1}));
  CHECK_THROWS_AS(make_composition({2, 0}), PreconditionError);
  CHECK_THROWS_AS(make_partition({1, 2}), PreconditionError);
}

TEST_CASE("refinement") {
  CHECK(is_refinement(P({3, 2, 2, 2, 1}), P({4, 3, 3})));
  CHECK_FALSE(is_refinement(P({3, 3}), P({4, 2})));
  CHECK(is_refinement(P({1, 1, 1}), P({3})));
  CHECK(is_refinement(P({2, 1}), P({2, 1})));
}

TEST_CASE("p-equivalence classes") {
  CHECK(class_members(4, 2) ==
        std::vector<std::vector<Partition>>{{P({1, 1, 1, 1}), P({2, 1, 1}), P({2, 2}), P({4})}, {P({3, 1})}});
  CHECK(class_members(3, 3) == std::vector<std::vector<Partition>>{{P({1, 1, 1}), P({3})}, {P({2, 1})}});
  CHECK(p_equiv_classes(2, 2).size() == 1);
  for (int r = 1; r <= 10; ++r)
    for (int p : {2, 3, 5}) {
      std::size_t total = 0;
      auto classes = p_equiv_classes(r, p);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        total += classes[i].members.size();
        if (i) CHECK(lex_less(classes[i - 1].key, classes[i].key));
      }
      CHECK(total == partitions(r).size());
    }
}

TEST_CASE("count_Q examples") {
  CHECK(count_Q(C({2, 1}), {1, 1, 1}) == 3);
  CHECK(count_Q(C({3, 1}), {2, 2}) == 0);
  CHECK(young_character(C({1, 1, 1}), P({1, 1, 1})) == 6);
  CHECK(young_character(C({2, 1}), P({1, 1, 1})) == 3);
}

TEST_CASE("young characters match orbit counting") {
  for (int r = 1; r <= 6; ++r)
    for (const auto& nu : compositions(r))
      for (const auto& lambda : partitions(r))
        CHECK(young_character(nu, lambda) == oracle::young_character_by_fixed_points(nu, lambda));
}

TEST_CASE("young characters are constant mod p on classes") {
  for (int p : {2, 3, 5})
    for (int r = 1; r <= 7; ++r)
      for (const auto& cl : p_equiv_classes(r, p))
        for (const auto& nu : compositions(r)) {
          auto v0 = young_character(nu, cl.members.front()) % std::uint64_t(p);
          for (const auto& m : cl.members) CHECK(young_character(nu, m) % std::uint64_t(p) == v0);
        }
}

TEST_CASE("witt and higher Lie dimensions") {
  CHECK(witt_dim(2, 6) == 9);
  CHECK(witt_dim(2, 12) == 335);
  CHECK(higher_lie_dim(2, P({3, 1})) == 4);
  CHECK(higher_lie_dim(2, P({1, 1, 1, 1})) == 5);
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 8; ++r) {
      CHECK(witt_dim(n, r) == oracle::count_lyndon_words(n, r));
      std::uint64_t total = 0, pw = 1;
      for (const auto& l : partitions(r)) total += higher_lie_dim(n, l);
      for (int k = 0; k < r; ++k) pw *= std::uint64_t(n);
      CHECK(total == pw);
    }
}

TEST_CASE("serialization round trip") {
  CHECK(to_string(P({3, 1, 1})) == "3,1,1");
  CHECK(parse_partition("3,1,1") == P({3, 1, 1}));
  CHECK(parse_composition("1,3") == C({1, 3}));
  CHECK_THROWS_AS(parse_partition("1,x"), PreconditionError);
}
