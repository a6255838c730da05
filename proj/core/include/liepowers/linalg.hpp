// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liepowers {

/* Raised when a caller violates a documented precondition (wrong field,
   mismatched dimensions, non-invariant subspace, ...). Distinct from an
   infeasible-but-well-posed problem, which is reported through return values. */
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/* The prime field F_p.  Entries are stored as bytes, so p must be below 256. */
class PrimeField {
 public:
  PrimeField() : PrimeField(2) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    std::uint32_t s = std::uint32_t(a) + b;
    return std::uint8_t(s >= p_ ? s - p_ : s);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t(a >= b ? a - b : a + p_ - b);
  }
  std::uint8_t neg(std::uint8_t a) const { return std::uint8_t(a ? p_ - a : 0); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t((std::uint32_t(a) * b) % p_);
  }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return std::uint8_t(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint8_t>> inverse_;
};

/* A single element of F_p together with its modulus. */
class FpScalar {
 public:
  FpScalar(long long value, std::uint32_t p);
  std::uint32_t value() const { return value_; }
  std::uint32_t p() const { return p_; }
  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const;
  FpScalar inverse() const;
  friend bool operator==(const FpScalar& a, const FpScalar& b) {
    return a.value_ == b.value_ && a.p_ == b.p_;
  }

 private:
  std::uint32_t value_;
  std::uint32_t p_;
};

namespace detail {
// dst[i] += c * src[i] for i in [0, len)
void axpy(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len,
          const PrimeField& f);
void scale(std::uint8_t* dst, std::uint8_t c, std::size_t len, const PrimeField& f);
}  // namespace detail

/* Dense row-major matrix over F_p.  Row vectors are the primary objects:
   a matrix acts on the right, v -> v * M. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field,
                          std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint8_t v) { data_[i * cols_ + j] = v; }
  std::uint8_t* row(std::size_t i) { return data_.data() + i * cols_; }
  const std::uint8_t* row(std::size_t i) const { return data_.data() + i * cols_; }
  std::vector<std::uint8_t> row_vector(std::size_t i) const {
    return {row(i), row(i) + cols_};
  }

  void append_row(const std::uint8_t* v);
  void append_row(const std::vector<std::uint8_t>& v) { append_row(v.data()); }
  void resize_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows_ * cols_);
  }
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix stacked(const Matrix& below) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(std::uint8_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<std::uint8_t> data_;
};

std::vector<std::uint8_t> vec_times(const std::vector<std::uint8_t>& v, const Matrix& m);

/* Compressed sparse rows.  Row i lists the image of the i-th basis vector. */
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field);

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n, PrimeField field);

  // Appends the next row from (column, value) pairs; zero values are dropped.
  void push_row(const std::vector<std::pair<std::uint32_t, std::uint8_t>>& entries);

  std::size_t rows() const { return offsets_.size() - 1; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  std::size_t nonzeros() const { return values_.size(); }

  // out = v * M
  void apply(const std::uint8_t* v, std::uint8_t* out) const;
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;
  // (this * x)
  Matrix multiply(const Matrix& x) const;
  // (x * this)
  Matrix left_multiply(const Matrix& x) const;
  SparseMatrix compose(const SparseMatrix& then) const;
  Matrix dense() const;

  template <class Fn>
  void for_row(std::size_t i, Fn&& fn) const {
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) fn(indices_[k], values_[k]);
  }

 private:
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> indices_;
  std::vector<std::uint8_t> values_;
};

struct RowEchelon {
  Matrix form;                      // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);

/* Incremental semi-echelon basis.  Rows are kept with leading entry 1 and
   zeros in the pivot columns of all earlier rows, which is all that
   reduction in insertion order needs. */
class EchelonBuilder {
 public:
  EchelonBuilder(std::size_t ambient, PrimeField field);

  // Reduces v in place; returns true (and keeps the residue) if it was independent.
  bool insert(std::vector<std::uint8_t> v);
  bool insert(const std::uint8_t* v) { return insert(std::vector<std::uint8_t>(v, v + ambient_)); }
  void reduce(std::uint8_t* v) const;
  bool contains(const std::uint8_t* v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t ambient() const { return ambient_; }
  const PrimeField& field() const { return field_; }
  const std::uint8_t* row(std::size_t i) const { return rows_.data() + i * ambient_; }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }

 private:
  std::size_t ambient_;
  PrimeField field_;
  std::vector<std::uint8_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int32_t> pivot_owner_;
};

/* Solves x * A = b for row vectors x, and exposes the left kernel of A. */
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);
  std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& b) const;
  const Matrix& left_kernel() const { return kernel_; }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t n_, m_;
  PrimeField field_;
  std::vector<std::uint8_t> rows_;    // reduced rows of A, each followed by its combination
  std::vector<std::size_t> pivots_;
  Matrix kernel_;
};

/* A linear subspace of F_p^N, stored in canonical reduced row-echelon form
   without zero rows.  Equality of subspaces is equality of these bases. */
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, PrimeField field);

  static Subspace span(const Matrix& generators);
  static Subspace span(const EchelonBuilder& builder);
  static Subspace full(std::size_t ambient, PrimeField field);
  // Trusts that `basis` is already in reduced row-echelon form without zero rows.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const PrimeField& field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  void reduce(std::uint8_t* v) const;
  bool contains(const std::uint8_t* v) const;
  bool contains(const std::vector<std::uint8_t>& v) const { return contains(v.data()); }
  bool contains(const Subspace& other) const;
  // Coordinates of a member with respect to basis(); no membership check.
  std::vector<std::uint8_t> coordinates(const std::uint8_t* v) const;
  std::optional<std::vector<std::uint8_t>> try_coordinates(const std::uint8_t* v) const;
  std::vector<std::uint8_t> vector_from(const std::vector<std::uint8_t>& coords) const;

  bool is_full() const { return dim() == ambient_; }
  bool is_invariant(const SparseMatrix& g) const;
  // Matrix of g restricted to this subspace in basis coordinates; throws if not invariant.
  Matrix restricted_action(const SparseMatrix& g) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  PrimeField field_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& whole);
// Image of a subspace under a linear map.
Subspace image(const Subspace& s, const SparseMatrix& g);
// Subspace of F^d given by coordinates of s's elements relative to a containing subspace.
Subspace in_coordinates(const Subspace& s, const Subspace& container);
// Inverse of in_coordinates.
Subspace from_coordinates(const Subspace& coords, const Subspace& container);

/* Data describing a cyclic Sylow-like subgroup P = <t> of order |P| with
   right-coset representatives of P in G; |G:P| must be prime to p. */
struct CyclicSylow {
  SparseMatrix generator;
  std::uint32_t order = 1;
  std::vector<std::pair<SparseMatrix, SparseMatrix>> coset_reps;  // (g, g^-1), G = U P g
};

/* A finite group acting on the right of F_p^N through invertible generators. */
class GroupAction {
 public:
  GroupAction() = default;
  GroupAction(std::size_t dim, PrimeField field, std::vector<SparseMatrix> generators,
              bool check_invertible = true);

  std::size_t dim() const { return dim_; }
  const PrimeField& field() const { return field_; }
  const std::vector<SparseMatrix>& generators() const { return generators_; }
  void set_sylow(CyclicSylow s);
  const std::optional<CyclicSylow>& sylow() const { return sylow_; }

 private:
  std::size_t dim_ = 0;
  PrimeField field_;
  std::vector<SparseMatrix> generators_;
  std::optional<CyclicSylow> sylow_;
};

/* An equivariant projection pi of `domain` onto `image`.  It is stored in
   factored form: row j of `retraction` holds the image-basis coordinates of
   pi applied to the j-th domain basis vector. */
struct Projection {
  Subspace domain;
  Subspace image;
  Matrix retraction;

  // pi as a dim(domain) x dim(domain) matrix in domain coordinates.
  Matrix matrix() const;
  // pi as an ambient-dimension vector map applied to a member of the domain.
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;
};

struct ProjectionCheck {
  bool image_in_domain = false;
  bool invariant = false;
  bool idempotent = false;
  bool equivariant = false;
  bool surjective = false;
  bool ok() const { return image_in_domain && invariant && idempotent && equivariant && surjective; }
  std::string describe() const;
};

ProjectionCheck verify_projection(const GroupAction& action, const Projection& pi);

/* Composition domain -> middle -> image of two verified projections. */
Projection compose(const Projection& first, const Projection& second);

struct Infeasibility {
  std::string reason;
  std::size_t rank_coefficients = 0;
  std::size_t rank_augmented = 0;
  std::vector<std::uint8_t> witness;  // ambient vector certifying failure, when available
};

struct SolveOptions {
  enum class Method { Automatic, Dense, Structured };
  Method method = Method::Automatic;
  std::size_t max_dense_unknowns = 6000;
  bool randomize = false;
  std::uint64_t seed = 0;
};

struct ProjectionSolution {
  std::optional<Projection> projection;
  Infeasibility infeasibility;
  std::string method;
  explicit operator bool() const { return projection.has_value(); }
};

/* Looks for pi: domain -> domain with pi^2 = pi, image(pi) = image and
   pi g = g pi for every generator.  Precondition violations throw
   PreconditionError; an equivariant projection that does not exist is reported
   through ProjectionSolution::infeasibility. */
ProjectionSolution solve_equivariant_projection(const GroupAction& action, const Subspace& image,
                                                const Subspace& domain,
                                                const SolveOptions& options = {});

}  // namespace liepowers
