// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Independent brute-force reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "liepowers/combinat.hpp"

namespace oracle {

inline bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t s = 1; s < w.size(); ++s)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + std::ptrdiff_t(s), w.end())) return false;
  return true;
}

inline std::uint64_t count_lyndon_words(int n, int r) {
  std::vector<int> w(std::size_t(r), 0);
  std::uint64_t count = 0;
  while (true) {
    if (is_lyndon(w)) ++count;
    int i = r - 1;
    while (i >= 0 && ++w[std::size_t(i)] == n) w[std::size_t(i--)] = 0;
    if (i < 0) break;
  }
  return count;
}

// A permutation with cycle type lambda on {0, ..., r-1}: consecutive cycles.
inline std::vector<int> permutation_of_type(const liepowers::Partition& lambda) {
  std::vector<int> perm;
  int start = 0;
  for (int part : lambda.parts) {
    for (int k = 0; k < part; ++k) perm.push_back(start + (k + 1) % part);
    start += part;
  }
  return perm;
}

// Fixed points of a permutation of cycle type lambda on the words with content nu,
// i.e. on the cosets of the Young subgroup of shape nu.
inline std::uint64_t young_character_by_fixed_points(const liepowers::Composition& nu,
                                                     const liepowers::Partition& lambda) {
  std::vector<int> word;
  for (std::size_t j = 0; j < nu.parts.size(); ++j)
    for (int k = 0; k < nu.parts[j]; ++k) word.push_back(int(j));
  std::vector<int> sigma = permutation_of_type(lambda);
  std::uint64_t fixed = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < word.size() && ok; ++i) ok = word[i] == word[std::size_t(sigma[i])];
    if (ok) ++fixed;
  } while (std::next_permutation(word.begin(), word.end()));
  return fixed;
}

}  // namespace oracle
