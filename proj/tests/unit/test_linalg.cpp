// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <doctest.h>

#include <random>
#include <set>

#include "liepowers/linalg.hpp"

using namespace liepowers;

namespace {

Matrix M(std::vector<std::vector<long long>> rows, std::uint32_t p) { return Matrix::from_rows(rows, PrimeField(p)); }

// Every vector of F_p^n as a list, for brute-force membership.
std::vector<std::vector<std::uint8_t>> all_vectors(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::set<std::vector<std::uint8_t>> members(const Subspace& s, std::uint32_t p) {
  std::set<std::vector<std::uint8_t>> out;
  for (const auto& c : all_vectors(s.dim(), p)) out.insert(s.vector_from(c));
  return out;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::size_t k = rng() % (n + 1);
  Matrix m(k, n, PrimeField(p));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, std::uint8_t(rng() % p));
  return Subspace::span(m);
}

}  // namespace

TEST_CASE("prime field rejects composite moduli") {
  CHECK_THROWS_AS(PrimeField(4), PreconditionError);
  CHECK_THROWS_AS(FpScalar(1, 9), PreconditionError);
  PrimeField f(7);
  for (std::uint8_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK((FpScalar(3, 5) * FpScalar(2, 5)).value() == 1);
  CHECK(FpScalar(3, 5).inverse() == FpScalar(2, 5));
}

TEST_CASE("rref examples") {
  auto id = rref(Matrix::identity(3, PrimeField(5)));
  CHECK(id.rank == 3);
  CHECK(id.form == Matrix::identity(3, PrimeField(5)));

  auto z = rref(Matrix(2, 3, PrimeField(3)));
  CHECK(z.rank == 0);
  CHECK(z.form.is_zero());

  auto e = rref(M({{1, 1}, {1, 1}}, 2));
  CHECK(e.rank == 1);
  CHECK(e.form == M({{1, 1}, {0, 0}}, 2));
}

TEST_CASE("rref is idempotent and preserves row space") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      Matrix m(r, c, PrimeField(p));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, std::uint8_t(rng() % p));
      auto once = rref(m);
      auto twice = rref(once.form);
      CHECK(twice.form == once.form);
      CHECK(Subspace::span(m) == Subspace::span(once.form));
    }
  }
}

TEST_CASE("intersection example over F2^3") {
  Subspace a = Subspace::span(M({{1, 1, 0}, {0, 1, 1}}, 2));
  Subspace b = Subspace::span(M({{1, 0, 1}}, 2));
  CHECK(intersect(a, b) == b);
}

TEST_CASE("sum and intersection agree with enumeration") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    std::size_t n = p == 2 ? 5 : 3;
    for (int trial = 0; trial < 60; ++trial) {
      Subspace a = random_subspace(rng, n, p), b = random_subspace(rng, n, p);
      Subspace s = sum(a, b), i = intersect(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      auto ma = members(a, p), mb = members(b, p), mi = members(i, p);
      std::set<std::vector<std::uint8_t>> expect;
      for (const auto& v : ma)
        if (mb.count(v)) expect.insert(v);
      CHECK(mi == expect);
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(is_direct_sum({a, b}, s) == (i.dim() == 0));
    }
  }
}

TEST_CASE("linear solver solves and finds left kernels") {
  std::mt19937_64 rng(3);
  PrimeField f(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a(5, 4, f);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.set(i, j, std::uint8_t(rng() % 3));
    LinearSolver s(a);
    CHECK(s.rank() + s.left_kernel().rows() == 5);
    CHECK((s.left_kernel() * a).is_zero());
    std::vector<std::uint8_t> x(5);
    for (auto& e : x) e = std::uint8_t(rng() % 3);
    auto b = vec_times(x, a);
    auto sol = s.solve(b);
    REQUIRE(sol);
    CHECK(vec_times(*sol, a) == b);
  }
}

TEST_CASE("equivariant projection examples") {
  SUBCASE("trivial action is always feasible") {
    PrimeField f(2);
    GroupAction act(3, f, {SparseMatrix::identity(3, f)});
    Subspace img = Subspace::span(M({{1, 1, 0}}, 2));
    auto sol = solve_equivariant_projection(act, img, Subspace::full(3, f));
    REQUIRE(sol);
    CHECK(verify_projection(act, *sol.projection).ok());
    Matrix pi = sol.projection->matrix();
    CHECK(pi * pi == pi);
  }
  SUBCASE("swap over F2 has no invariant complement of the diagonal") {
    PrimeField f(2);
    GroupAction act(2, f, {SparseMatrix::from_dense(M({{0, 1}, {1, 0}}, 2))});
    Subspace img = Subspace::span(M({{1, 1}}, 2));
    auto sol = solve_equivariant_projection(act, img, Subspace::full(2, f));
    CHECK_FALSE(sol);
    CHECK(sol.infeasibility.rank_augmented == sol.infeasibility.rank_coefficients + 1);
  }
  SUBCASE("swap over F3 splits off the antidiagonal") {
    PrimeField f(3);
    GroupAction act(2, f, {SparseMatrix::from_dense(M({{0, 1}, {1, 0}}, 3))});
    Subspace img = Subspace::span(M({{1, 1}}, 3));
    auto sol = solve_equivariant_projection(act, img, Subspace::full(2, f));
    REQUIRE(sol);
    Matrix pi = sol.projection->matrix();
    CHECK(pi * pi == pi);
    CHECK(Subspace::span(LinearSolver(pi.transpose().transpose()).left_kernel()) ==
          Subspace::span(M({{1, 2}}, 3)));
  }
  SUBCASE("precondition violations are not infeasibility") {
    PrimeField f(2);
    GroupAction act(2, f, {SparseMatrix::from_dense(M({{0, 1}, {1, 0}}, 2))});
    Subspace not_invariant = Subspace::span(M({{1, 0}}, 2));
    CHECK_THROWS_AS(solve_equivariant_projection(act, not_invariant, Subspace::full(2, f)), PreconditionError);
    CHECK_THROWS_AS(GroupAction(2, f, {SparseMatrix::from_dense(M({{1, 1}, {1, 1}}, 2))}), PreconditionError);
  }
}

TEST_CASE("structured solver agrees with dense feasibility on cyclic groups") {
  // Z/p acting on F_p[Z/p]-modules built from Jordan blocks; P is the whole group.
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 2 + rng() % 4;
      // Random unipotent upper triangular operator of order p (or 1).
      Matrix t = Matrix::identity(n, f);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) t.set(i, j, std::uint8_t(rng() % p));
      Matrix pw = Matrix::identity(n, f);
      for (std::uint32_t k = 0; k < p; ++k) pw = pw * t;
      if (!(pw == Matrix::identity(n, f))) continue;
      SparseMatrix ts = SparseMatrix::from_dense(t);
      GroupAction act(n, f, {ts});
      CyclicSylow sy;
      sy.generator = ts;
      sy.order = p;
      sy.coset_reps = {{SparseMatrix::identity(n, f), SparseMatrix::identity(n, f)}};
      act.set_sylow(sy);
      // Invariant subspace: span of a random vector's orbit.
      std::vector<std::uint8_t> v(n);
      for (auto& e : v) e = std::uint8_t(rng() % p);
      Matrix orbit(0, n, f);
      for (std::uint32_t k = 0; k < p; ++k) {
        orbit.append_row(v);
        v = vec_times(v, t);
      }
      Subspace img = Subspace::span(orbit);
      SolveOptions dense;
      dense.method = SolveOptions::Method::Dense;
      SolveOptions structured;
      structured.method = SolveOptions::Method::Structured;
      auto a = solve_equivariant_projection(act, img, Subspace::full(n, f), dense);
      auto b = solve_equivariant_projection(act, img, Subspace::full(n, f), structured);
      CHECK(bool(a) == bool(b));
    }
  }
}
