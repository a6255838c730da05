// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include <random>

#include "liepowers/descent.hpp"
#include "liepowers/modrep.hpp"

using namespace liepowers;

TEST_CASE("GL generators") {
  auto g22 = gl_generators(2, 2);
  REQUIRE(g22.size() == 2);
  CHECK(g22[0] == Matrix::from_rows({{0, 1}, {1, 0}}, PrimeField(2)));
  CHECK(g22[1] == Matrix::from_rows({{1, 1}, {0, 1}}, PrimeField(2)));
  CHECK(enumerate_group(g22).size() == 6);
  CHECK(enumerate_group(gl_generators(2, 3)).size() == 48);
  CHECK(enumerate_group(gl_generators(3, 2)).size() == 168);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto g1 = gl_generators(1, p);
    REQUIRE(g1.size() == 1);
    CHECK(enumerate_group(g1).size() == p - 1);
  }
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 3) == 11232);
}

TEST_CASE("matrix inverse") {
  PrimeField f(5);
  Matrix g = Matrix::from_rows({{1, 2, 0}, {3, 1, 4}, {0, 1, 2}}, f);
  CHECK(g * inverse(g) == Matrix::identity(3, f));
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, f)), PreconditionError);
}

TEST_CASE("induced action on tensor powers") {
  PrimeField f(2);
  auto ta = induce_on_tensor_power(gl_generators(2, 2), 2);
  CHECK(ta.apply(0, Tensor::word(2, parse_word("12"), f)) == Tensor::word(2, parse_word("21"), f));
  auto id = induce_on_tensor_power({Matrix::identity(3, f)}, 3);
  CHECK(id.action.generators()[0].dense() == Matrix::identity(27, f));
  // Multiplicative in g.
  PrimeField g3(3);
  auto gens = gl_generators(2, 3);
  for (const auto& a : gens)
    for (const auto& b : gens)
      CHECK(induced_matrix(a * b, 3).dense() == induced_matrix(a, 3).dense() * induced_matrix(b, 3).dense());
}

TEST_CASE("Lie powers are invariant under the induced action") {
  for (std::uint32_t p : {2u, 3u})
    for (int n : {2, 3})
      for (int r = 1; r <= (n == 2 ? 6 : 4); ++r) {
        auto ta = induce_on_tensor_power(gl_generators(n, p), r);
        auto l = lie_power(n, r, PrimeField(p));
        for (const auto& g : ta.action.generators()) CHECK(l.space.is_invariant(g));
      }
}

TEST_CASE("Sylow data for n <= 2") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto t2 = induce_on_tensor_power(gl_generators(2, p), 2);
    REQUIRE(t2.action.sylow());
    CHECK(t2.action.sylow()->order == p);
    CHECK(t2.action.sylow()->coset_reps.size() == (p * p - 1) * (p - 1));
    auto t1 = induce_on_tensor_power(gl_generators(1, p), 3);
    REQUIRE(t1.action.sylow());
    CHECK(t1.action.sylow()->coset_reps.size() == p - 1);
  }
  CHECK_FALSE(induce_on_tensor_power(gl_generators(3, 2), 2).action.sylow());
}

TEST_CASE("place permutations commute with the group action") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    auto ta = induce_on_tensor_power(gl_generators(2, p), 4);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint8_t> v(16);
      for (auto& x : v) x = std::uint8_t(rng() % p);
      Tensor t = Tensor::from_vector(2, 4, v, f);
      for (int i = 0; i + 1 < 4; ++i) {
        Permutation s{0, 1, 2, 3};
        std::swap(s[std::size_t(i)], s[std::size_t(i + 1)]);
        for (std::size_t g = 0; g < ta.base.size(); ++g)
          CHECK(ta.apply(g, act_on_tensor(s, t)) == act_on_tensor(s, ta.apply(g, t)));
      }
    }
  }
}

TEST_CASE("module closure") {
  PrimeField f(2);
  auto ta = induce_on_tensor_power(gl_generators(2, 2), 2);
  auto seed = TensorSubspace::span(2, 2, {Tensor::word(2, parse_word("12"), f)}, f);
  auto closure = module_closure(seed.space, ta);
  CHECK(closure.dim() == 4);
  CHECK(closure.contains(seed.space));
  auto l = lie_power(2, 4, f);
  auto ta4 = induce_on_tensor_power(gl_generators(2, 2), 4);
  CHECK(module_closure(l.space, ta4) == l.space);
}
