// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/modrep.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace liepowers {

namespace {

std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t d = 1; d < p; ++d) {
    std::uint32_t x = d, order = 1;
    while (x != 1) {
      x = (x * d) % p;
      ++order;
    }
    if (order == p - 1) return d;
  }
  return 1;
}

std::string key(const Matrix& m) {
  std::string s(m.rows() * m.cols(), '\0');
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i * m.cols() + j] = char(m.at(i, j));
  return s;
}

}  // namespace

std::uint64_t gl_order(int n, std::uint32_t p) {
  // prod_{i<n} (p^n - p^i)
  const auto top = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) {
    if (pn > top / p) return top;
    pn *= p;
  }
  std::uint64_t order = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    std::uint64_t factor = pn - pi;
    if (order > top / factor) return top;
    order *= factor;
    pi *= p;
  }
  return order;
}

std::vector<Matrix> enumerate_group(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionError("no generators");
  const Matrix id = Matrix::identity(gens.front().rows(), gens.front().field());
  std::vector<Matrix> elems{id};
  std::unordered_set<std::string> seen{key(id)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Matrix h = elems[i] * g;
      if (seen.insert(key(h)).second) {
        if (elems.size() >= cap) throw std::length_error("group has more than " + std::to_string(cap) + " elements");
        elems.push_back(std::move(h));
      }
    }
  return elems;
}

std::vector<Matrix> gl_generators(int n, std::uint32_t p) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  PrimeField f(p);
  std::vector<Matrix> gens;
  const std::uint8_t d = std::uint8_t(primitive_root(p));
  if (n == 1) {
    gens.push_back(Matrix::from_rows({{d}}, f));
    return gens;
  }
  Matrix cyc(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f);
  for (int i = 0; i < n; ++i) cyc.set(std::size_t(i), std::size_t((i + 1) % n), 1);
  Matrix tv = Matrix::identity(std::size_t(n), f);
  tv.set(0, 1, 1);
  gens.push_back(cyc);
  gens.push_back(tv);
  if (p > 2) {
    Matrix dg = Matrix::identity(std::size_t(n), f);
    dg.set(0, 0, d);
    gens.push_back(dg);
  }
  const std::uint64_t order = gl_order(n, p);
  if (order <= 1'000'000 && enumerate_group(gens, order).size() != order)
    throw std::logic_error("generators do not generate GL(" + std::to_string(n) + ", " + std::to_string(p) + ")");
  return gens;
}

Matrix inverse(const Matrix& g) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw PreconditionError("inverse of a non-square matrix");
  Matrix aug(n, 2 * n, g.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, g.at(i, j));
    aug.set(i, n + i, 1);
  }
  RowEchelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] >= n) throw PreconditionError("matrix is singular");
  Matrix out(n, n, g.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, e.form.at(i, n + j));
  return out;
}

SparseMatrix induced_matrix(const Matrix& g, int r) {
  const std::size_t n = g.rows();
  const PrimeField& f = g.field();
  const std::size_t dim = power(int(n), r);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> letter(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.at(i, j)) letter[i].push_back({std::uint32_t(j), g.at(i, j)});
  SparseMatrix out(dim, dim, f);
  std::vector<std::pair<std::uint32_t, std::uint8_t>> cur, next;
  std::vector<std::size_t> digits(static_cast<std::size_t>(r));
  for (std::size_t w = 0; w < dim; ++w) {
    std::size_t x = w;
    for (int i = r - 1; i >= 0; --i) {
      digits[std::size_t(i)] = x % n;
      x /= n;
    }
    cur.assign(1, {0, 1});
    for (int i = 0; i < r; ++i) {
      next.clear();
      for (const auto& [idx, c] : cur)
        for (const auto& [j, v] : letter[digits[std::size_t(i)]])
          next.push_back({std::uint32_t(idx * n + j), f.mul(c, v)});
      cur.swap(next);
    }
    std::sort(cur.begin(), cur.end());
    out.push_row(cur);
  }
  return out;
}

Tensor TensorAction::apply(std::size_t generator, const Tensor& t) const {
  if (t.n() != n || t.degree() != r) throw PreconditionError("tensor does not live in this tensor power");
  return Tensor::from_vector(n, r, action.generators().at(generator).apply(t.coeffs()), field);
}

TensorAction induce_on_tensor_power(const std::vector<Matrix>& gens, int r) {
  if (gens.empty()) throw PreconditionError("no generators");
  if (r < 1) throw PreconditionError("degree must be positive");
  TensorAction ta;
  ta.n = int(gens.front().rows());
  ta.r = r;
  ta.field = gens.front().field();
  ta.base = gens;
  std::vector<SparseMatrix> induced;
  for (const auto& g : gens) {
    if (g.rows() != std::size_t(ta.n) || g.cols() != std::size_t(ta.n) || g.field() != ta.field)
      throw PreconditionError("generators must be square matrices of one size over one field");
    inverse(g);  // invertibility on V implies it on T^r
    induced.push_back(induced_matrix(g, r));
  }
  const std::size_t dim = power(ta.n, r);
  ta.action = GroupAction(dim, ta.field, std::move(induced), false);

  const std::uint32_t p = ta.field.p();
  if (ta.n <= 2 && gens == gl_generators(ta.n, p)) {
    auto elems = enumerate_group(gens);
    CyclicSylow sy;
    std::vector<Matrix> pgroup{Matrix::identity(std::size_t(ta.n), ta.field)};
    if (ta.n == 2) {
      sy.order = p;
      for (std::uint32_t i = 1; i < p; ++i) pgroup.push_back(pgroup.back() * gens[1]);
      sy.generator = induced_matrix(gens[1], r);
    } else {
      sy.generator = SparseMatrix::identity(dim, ta.field);
    }
    std::unordered_set<std::string> covered;
    for (const auto& g : elems) {
      if (covered.count(key(g))) continue;
      for (const auto& t : pgroup) covered.insert(key(t * g));
      sy.coset_reps.push_back({induced_matrix(g, r), induced_matrix(inverse(g), r)});
    }
    ta.action.set_sylow(std::move(sy));
  }
  return ta;
}

Subspace module_closure(const Subspace& seed, const GroupAction& action) {
  if (seed.ambient_dim() != action.dim()) throw PreconditionError("seed and action have different ambient spaces");
  EchelonBuilder eb(action.dim(), action.field());
  std::deque<std::vector<std::uint8_t>> queue;
  for (std::size_t i = 0; i < seed.dim(); ++i) {
    auto v = seed.basis().row_vector(i);
    if (eb.insert(v)) queue.push_back(std::move(v));
  }
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : action.generators()) {
      auto w = g.apply(v);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::span(eb);
}

}  // namespace liepowers
