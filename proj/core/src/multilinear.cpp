// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "multilinear.hpp"

#include <algorithm>
#include <numeric>

namespace liepowers::internal {

Multilinear::Multilinear(int q, PrimeField field) : q_(q), field_(std::move(field)) {
  if (q < 1 || q > 7) throw PreconditionError("multilinear computations support degrees 1..7");
  index_.resize(factorial(q));
  for (std::uint64_t k = 0; k < index_.size(); ++k) {
    Permutation perm = permutation_unrank(k, q);
    std::size_t idx = 0;
    for (int v : perm) idx = idx * std::size_t(q) + std::size_t(v);
    index_[k] = idx;
  }
}

std::vector<std::uint8_t> Multilinear::compress(const Tensor& t) const {
  if (t.n() != q_ || t.degree() != q_) throw PreconditionError("tensor is not in T^q(V^(q))");
  std::vector<std::uint8_t> v(index_.size());
  for (std::size_t k = 0; k < index_.size(); ++k) v[k] = t.coeffs()[index_[k]];
  return v;
}

Subspace Multilinear::span(const std::vector<Tensor>& elements) const {
  EchelonBuilder eb(size(), field_);
  for (const auto& t : elements) eb.insert(compress(t));
  return Subspace::span(eb);
}

Tensor Multilinear::letter(int i) const { return Tensor::word(q_, {i}, field_); }

std::vector<Tensor> Multilinear::lie_generators(std::uint32_t letters) const {
  std::vector<int> ls;
  for (int i = 0; i < q_; ++i)
    if (letters & (1u << i)) ls.push_back(i + 1);
  std::vector<Tensor> out;
  if (ls.empty()) return out;
  std::vector<int> rest(ls.begin() + 1, ls.end());
  do {
    std::vector<Tensor> fs{letter(ls.front())};
    for (int l : rest) fs.push_back(letter(l));
    out.push_back(left_normed_bracket(fs));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Subspace Multilinear::lie() const { return span(lie_generators((1u << q_) - 1)); }

Subspace Multilinear::lower(int k) const {
  const std::uint32_t all = (1u << q_) - 1;
  EchelonBuilder eb(size(), field_);
  // Each unordered split {S, S^c} once: S holds letter 1.
  for (std::uint32_t s = 1; s < all; ++s) {
    if (!(s & 1u)) continue;
    int a = __builtin_popcount(s);
    if (a % k != 0 || (q_ - a) % k != 0) continue;
    auto left = lie_generators(s), right = lie_generators(all & ~s);
    for (const auto& x : left)
      for (const auto& y : right) eb.insert(compress(bracket(x, y)));
  }
  return Subspace::span(eb);
}

GroupAction Multilinear::letter_action() const {
  std::vector<SparseMatrix> gens;
  std::vector<Permutation> letter_perms;
  Permutation swap(static_cast<std::size_t>(q_)), cycle(static_cast<std::size_t>(q_));
  std::iota(swap.begin(), swap.end(), 0);
  if (q_ > 1) std::swap(swap[0], swap[1]);
  for (int i = 0; i < q_; ++i) cycle[std::size_t(i)] = (i + 1) % q_;
  letter_perms.push_back(swap);
  letter_perms.push_back(cycle);
  for (const auto& rho : letter_perms) {
    SparseMatrix m(size(), size(), field_);
    for (std::uint64_t k = 0; k < size(); ++k) {
      Permutation tau = permutation_unrank(k, q_);
      for (auto& v : tau) v = rho[std::size_t(v)];
      m.push_row({{std::uint32_t(permutation_rank(tau)), 1}});
    }
    gens.push_back(std::move(m));
  }
  return GroupAction(size(), field_, std::move(gens), false);
}

TensorSubspace Multilinear::substitute(const Subspace& s, int n) const {
  std::vector<Tensor> images;
  std::vector<Permutation> perms(size());
  for (std::uint64_t k = 0; k < size(); ++k) perms[k] = permutation_unrank(k, q_);
  // Letter permutations of the source are absorbed by the invariance of s,
  // so non-decreasing maps suffice.
  std::vector<int> f(static_cast<std::size_t>(q_), 0);
  while (true) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      Tensor t(n, q_, field_);
      const std::uint8_t* row = s.basis().row(i);
      for (std::size_t k = 0; k < size(); ++k) {
        if (!row[k]) continue;
        std::size_t idx = 0;
        for (int v : perms[k]) idx = idx * std::size_t(n) + std::size_t(f[std::size_t(v)]);
        t.coeffs()[idx] = field_.add(t.coeffs()[idx], row[k]);
      }
      images.push_back(std::move(t));
    }
    int pos = q_ - 1;
    while (pos >= 0 && f[std::size_t(pos)] == n - 1) --pos;
    if (pos < 0) break;
    ++f[std::size_t(pos)];
    for (int j = pos + 1; j < q_; ++j) f[std::size_t(j)] = f[std::size_t(pos)];
  }
  return TensorSubspace::span(n, q_, images, field_);
}

}  // namespace liepowers::internal
