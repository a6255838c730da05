// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "homogeneous.hpp"

#include <algorithm>

namespace liepowers {

HomogeneousSpan::HomogeneousSpan(int n, int r, PrimeField field) : n_(n), r_(r), field_(field) {
  const std::size_t dim = power(n, r);
  weight_of_.resize(dim);
  local_.resize(dim);
  std::map<std::vector<int>, std::uint32_t> ids;
  for (std::size_t i = 0; i < dim; ++i) {
    auto content = word_content(index_word(i, n, r), n);
    auto [it, fresh] = ids.emplace(content, std::uint32_t(ids.size()));
    if (fresh) words_.emplace_back();
    weight_of_[i] = it->second;
    local_[i] = std::uint32_t(words_[it->second].size());
    words_[it->second].push_back(i);
  }
  builders_.resize(words_.size());
}

bool HomogeneousSpan::try_insert(const Tensor& t) {
  if (t.n() != n_ || t.degree() != r_) throw PreconditionError("tensor from another space");
  const auto& c = t.coeffs();
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) return true;
  const std::uint32_t w = weight_of_[first];
  const auto& words = words_[w];
  std::size_t nonzero = 0;
  std::vector<std::uint8_t> local(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    local[k] = c[words[k]];
    if (local[k]) ++nonzero;
  }
  if (nonzero != t.support_size()) return false;
  if (!builders_[w]) builders_[w].emplace(words.size(), field_);
  if (builders_[w]->insert(std::move(local))) ++rank_;
  return true;
}

TensorSubspace HomogeneousSpan::subspace() const {
  const std::size_t dim = power(n_, r_);
  std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> rows;
  for (std::size_t w = 0; w < builders_.size(); ++w) {
    if (!builders_[w] || builders_[w]->rank() == 0) continue;
    Subspace local = Subspace::span(*builders_[w]);
    const auto& words = words_[w];
    for (std::size_t s = 0; s < local.dim(); ++s) {
      std::vector<std::uint8_t> v(dim, 0);
      for (std::size_t k = 0; k < words.size(); ++k) v[words[k]] = local.basis().at(s, k);
      rows.emplace_back(words[local.pivots()[s]], std::move(v));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Matrix m(0, dim, field_);
  std::vector<std::size_t> pivots;
  for (auto& [p, v] : rows) {
    m.append_row(v);
    pivots.push_back(p);
  }
  return TensorSubspace(n_, r_, Subspace::from_rref(std::move(m), std::move(pivots)));
}

}  // namespace liepowers
