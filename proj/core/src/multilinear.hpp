// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <cstdint>
#include <vector>

#include "liepowers/descent.hpp"
#include "liepowers/freelie.hpp"
#include "liepowers/linalg.hpp"

namespace liepowers::internal {

/* The multilinear part of T^q(V^(q)): words using every letter 1..q once,
   indexed by the lexicographic rank of the permutation i -> letter - 1.
   Letter permutations act on it as Sym(q); subspaces invariant under them
   determine uniform families through their substitution images. */
class Multilinear {
 public:
  Multilinear(int q, PrimeField field);

  int degree() const { return q_; }
  std::size_t size() const { return index_.size(); }
  const PrimeField& field() const { return field_; }

  std::vector<std::uint8_t> compress(const Tensor& t) const;  // t lives in T^q(V^(q))
  Subspace span(const std::vector<Tensor>& elements) const;
  Tensor letter(int i) const;  // x_i as an element of T^1(V^(q))

  // Multilinear Lie elements on a letter set (bit i-1 for letter i): left-normed
  // brackets starting with the smallest letter.
  std::vector<Tensor> lie_generators(std::uint32_t letters) const;
  Subspace lie() const;
  // Degree-q multilinear part of the subalgebra generated by L^a for a = k, 2k, ..., q - k.
  Subspace lower(int k) const;

  GroupAction letter_action() const;

  /* Span of all substitution images x_i -> x_f(i), f: {1..q} -> {1..n}. */
  TensorSubspace substitute(const Subspace& s, int n) const;

 private:
  int q_;
  PrimeField field_;
  std::vector<std::size_t> index_;  // rank -> word index in T^q(V^(q))
};

}  // namespace liepowers::internal
