// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <cstdint>
#include <vector>

#include "liepowers/freelie.hpp"
#include "liepowers/linalg.hpp"

namespace liepowers {

// |GL(n, F_p)|; saturates at UINT64_MAX.
std::uint64_t gl_order(int n, std::uint32_t p);

/* Generators of GL(n, F_p): the cyclic permutation matrix, the transvection
   I + E_12 and, for p > 2, diag(d, 1, ..., 1) with d primitive.  For n = 1 the
   single generator [d].  Generation is confirmed by closure when the group
   has at most 10^6 elements. */
std::vector<Matrix> gl_generators(int n, std::uint32_t p);

// All elements of the group generated by `gens`; throws std::length_error past `cap`.
std::vector<Matrix> enumerate_group(const std::vector<Matrix>& gens, std::size_t cap = 10'000'000);

Matrix inverse(const Matrix& g);  // throws PreconditionError if singular

/* Matrix of g on T^r(V): row w is the product of the row images of the letters of w. */
SparseMatrix induced_matrix(const Matrix& g, int r);

/* A group of n x n matrices acting on T^r(V^(n)) by letter substitution. */
struct TensorAction {
  int n = 0;
  int r = 0;
  PrimeField field;
  std::vector<Matrix> base;  // generators on V
  GroupAction action;        // induced generators, with Sylow data when available

  Tensor apply(std::size_t generator, const Tensor& t) const;
};

/* Induces `gens` on T^r.  When the generators are the GL(n, p) set above with
   n <= 2, the action also carries a cyclic Sylow subgroup (generated by the
   transvection; trivial for n = 1) with right-coset representatives. */
TensorAction induce_on_tensor_power(const std::vector<Matrix>& gens, int r);

// Smallest subspace containing `seed` and invariant under every generator.
Subspace module_closure(const Subspace& seed, const GroupAction& action);
inline Subspace module_closure(const Subspace& seed, const TensorAction& action) {
  return module_closure(seed, action.action);
}

}  // namespace liepowers
