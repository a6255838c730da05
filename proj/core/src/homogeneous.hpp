// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "liepowers/freelie.hpp"

namespace liepowers {

/* Span of multihomogeneous tensors, kept as one echelon basis per content.
   Rank work then happens inside the (much smaller) weight spaces. */
class HomogeneousSpan {
 public:
  HomogeneousSpan(int n, int r, PrimeField field);

  // False if t is not multihomogeneous; nothing is inserted in that case.
  bool try_insert(const Tensor& t);
  std::size_t rank() const { return rank_; }
  TensorSubspace subspace() const;

 private:
  int n_, r_;
  PrimeField field_;
  std::vector<std::uint32_t> weight_of_;     // per word
  std::vector<std::uint32_t> local_;         // position inside its weight space
  std::vector<std::vector<std::size_t>> words_;  // per weight
  std::vector<std::optional<EchelonBuilder>> builders_;
  std::size_t rank_ = 0;
};

}  // namespace liepowers
