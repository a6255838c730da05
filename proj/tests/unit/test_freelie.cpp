// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include <map>

#include "liepowers/freelie.hpp"
#include "oracles.hpp"

using namespace liepowers;

namespace {
Tensor X(int n, const std::string& w, std::uint32_t p) { return Tensor::word(n, parse_word(w), PrimeField(p)); }
}  // namespace

TEST_CASE("words and indices") {
  CHECK(word_index(parse_word("112"), 2) == 1);
  CHECK(index_word(1, 2, 3) == parse_word("112"));
  CHECK(word_string(index_word(26, 3, 3)) == "333");
}

TEST_CASE("brackets") {
  PrimeField f(2);
  Tensor b = left_normed_bracket({X(2, "1", 2), X(2, "2", 2), X(2, "2", 2)});
  CHECK(b == X(2, "122", 2) + X(2, "221", 2));
  PrimeField g(3);
  Tensor c = bracket(X(2, "1", 3), X(2, "2", 3));
  CHECK(c.coeff(parse_word("12")) == 1);
  CHECK(c.coeff(parse_word("21")) == 2);
  CHECK(bracket(c, c).is_zero());
}

TEST_CASE("Lyndon words and bases") {
  auto w = lyndon_words(2, 3);
  REQUIRE(w.size() == 2);
  CHECK(word_string(w[0]) == "112");
  CHECK(word_string(w[1]) == "122");
  auto [u, v] = standard_factorization(parse_word("112122"));
  CHECK(word_string(u) == "1");
  CHECK(word_string(v) == "12122");
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 7; ++r) {
      CHECK(lyndon_words(n, r).size() == oracle::count_lyndon_words(n, r));
      for (std::uint32_t p : {2u, 3u}) CHECK(lie_power(n, r, PrimeField(p)).dim() == witt_dim(n, r));
    }
  // Leading word of a Lyndon bracket is the word itself.
  for (const auto& word : lyndon_words(3, 5)) CHECK(lyndon_bracket(word, 3, PrimeField(5)).coeff(word) == 1);
}

TEST_CASE("Lie powers are spanned by left-normed brackets of letters") {
  PrimeField f(3);
  for (int r = 1; r <= 5; ++r) {
    std::vector<Tensor> gens;
    for (std::size_t i = 0; i < power(2, r); ++i) {
      Word w = index_word(i, 2, r);
      std::vector<Tensor> letters;
      for (int l : w) letters.push_back(Tensor::word(2, {l}, f));
      gens.push_back(left_normed_bracket(letters));
    }
    CHECK(TensorSubspace::span(2, r, gens, f) == lie_power(2, r, f));
  }
}

TEST_CASE("PBW filtration factor dimensions") {
  PbwBasis pbw(2, 4, PrimeField(2));
  auto levels = filtration(pbw);
  std::map<std::string, std::size_t> dims;
  for (const auto& l : levels) dims[to_string(l.lambda)] = l.factor_dim;
  CHECK(dims["1,1,1,1"] == 5);
  CHECK(dims["2,1,1"] == 3);
  CHECK(dims["2,2"] == 1);
  CHECK(dims["3,1"] == 4);
  CHECK(dims["4"] == 3);
  for (int n : {2, 3})
    for (int r = 1; r <= 5; ++r)
      for (std::uint32_t p : {2u, 3u}) {
        PbwBasis b(n, r, PrimeField(p));
        auto lv = filtration(b);
        CHECK(lv.back().dim == power(n, r));
        for (const auto& l : lv) CHECK(l.factor_dim == higher_lie_dim(n, l.lambda));
      }
}

TEST_CASE("filtration subspaces are nested") {
  PbwBasis b(2, 4, PrimeField(3));
  auto parts = partitions(4);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    auto lower = filtration_subspace(b, parts[i]);
    auto upper = filtration_subspace(b, parts[i + 1]);
    CHECK(lower.space.contains(upper.space));
    CHECK(filtration_subspace_above(b, parts[i]) == upper);
  }
  CHECK(filtration_subspace(b, parts.back()) == lie_power(2, 4, PrimeField(3)));
}

TEST_CASE("PBW basis with caller-supplied generators") {
  PrimeField f(2);
  std::vector<PbwGenerator> gens;
  for (int d = 1; d <= 3; ++d)
    for (auto& t : lyndon_basis(2, d, f)) gens.push_back({t, 0});
  CHECK_NOTHROW(PbwBasis(2, 3, gens));
  gens.pop_back();
  CHECK_THROWS_AS(PbwBasis(2, 3, gens), PreconditionError);
}

TEST_CASE("truncation and symmetric extension") {
  PrimeField f(2);
  auto l2 = lie_power(2, 2, f);
  auto ext = symmetrize_extend(l2, 3);
  CHECK(ext.dim() == 3);
  CHECK(ext == lie_power(3, 2, f));
  CHECK(truncate(ext, 2) == l2);
  auto l3 = lie_power(3, 3, PrimeField(3));
  CHECK(truncate(l3, 2) == lie_power(2, 3, PrimeField(3)));
  Tensor t = X(3, "132", 2) + X(3, "121", 2);
  CHECK(truncate(t, 2) == X(2, "121", 2));
}

TEST_CASE("weight components") {
  PrimeField f(2);
  auto l2 = lie_power(2, 2, f);
  CHECK(weight_component(l2, {2, 0}).dim() == 0);
  CHECK(weight_component(l2, {1, 1}).dim() == 1);
}

TEST_CASE("generated subalgebras and elimination pieces") {
  PrimeField f(2);
  auto gens = subalgebra_generated({TensorSubspace::full(2, 1, f)}, 6);
  for (int d = 1; d <= 6; ++d) CHECK(gens[std::size_t(d - 1)] == lie_power(2, d, f));

  auto b = lie_power(2, 3, f);
  // X: a complement of [B, B] in L^6 made of Lyndon brackets.
  auto bb = bracket_span(b, b);
  REQUIRE(bb.dim() == 1);
  auto lyn = lyndon_basis(2, 6, f);
  TensorSubspace x;
  for (std::size_t drop = 0; drop < lyn.size(); ++drop) {
    std::vector<Tensor> xs;
    for (std::size_t i = 0; i < lyn.size(); ++i)
      if (i != drop) xs.push_back(lyn[i]);
    x = TensorSubspace::span(2, 6, xs, f);
    if (sum(x, bb).dim() == 9) break;
  }
  CHECK(x.dim() == 8);
  auto pieces = lazard_pieces({x}, b, 9);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[1].space.dim() == 16);
  CHECK(pieces[1].space.degree == 9);
}

TEST_CASE("text format round trip") {
  PrimeField f(3);
  auto l3 = lie_power(2, 3, f);
  std::string text = serialize(l3);
  CHECK(text.rfind("3 2 3\n", 0) == 0);
  CHECK(parse_tensor_subspace("# comment\n" + text) == l3);
  auto s = parse_tensor_subspace("3 2 3\n1 112 2 121\n");
  CHECK(s.dim() == 1);
  CHECK(s.basis_element(0).coeff(parse_word("121")) == 2);
  CHECK_THROWS_AS(parse_tensor_subspace("3 2 3\n1 11\n"), PreconditionError);
  CHECK_THROWS_AS(parse_tensor_subspace("4 2 3\n"), PreconditionError);
}
