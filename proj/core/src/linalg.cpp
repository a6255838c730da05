// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/linalg.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace liepowers {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("field characteristic must be prime, got " + std::to_string(p));
  if (p > 251) throw PreconditionError("field characteristic must be below 256");
  auto inv = std::make_shared<std::vector<std::uint8_t>>(p, 0);
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        (*inv)[a] = std::uint8_t(b);
        break;
      }
  inverse_ = std::move(inv);
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a % p_ == 0) throw PreconditionError("zero has no inverse");
  return (*inverse_)[a];
}

FpScalar::FpScalar(long long value, std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("scalar modulus must be prime");
  long long r = value % static_cast<long long>(p);
  value_ = std::uint32_t(r < 0 ? r + p : r);
}

static void same_modulus(const FpScalar& a, const FpScalar& b) {
  if (a.p() != b.p()) throw PreconditionError("scalars from different fields");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  same_modulus(*this, o);
  return FpScalar((long long)value_ + o.value_, p_);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
  same_modulus(*this, o);
  return FpScalar((long long)value_ - o.value_, p_);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
  same_modulus(*this, o);
  return FpScalar((long long)value_ * o.value_, p_);
}
FpScalar FpScalar::operator-() const { return FpScalar(-(long long)value_, p_); }
FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw PreconditionError("zero has no inverse");
  std::uint64_t r = 1, b = value_, e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return FpScalar((long long)r, p_);
}

namespace detail {

void axpy(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t len,
          const PrimeField& f) {
  if (c == 0) return;
  const std::uint32_t p = f.p();
  if (p == 2) {
    for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
    return;
  }
  // Barrett reduction, exact for x < 2^16 when p < 256.
  const std::uint32_t m = ((1u << 24) + p - 1) / p;
  const std::uint32_t cc = c;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t x = dst[i] + cc * src[i];
    std::uint32_t q = (x * m) >> 24;
    dst[i] = std::uint8_t(x - q * p);
  }
}

void scale(std::uint8_t* dst, std::uint8_t c, std::size_t len, const PrimeField& f) {
  if (c == 1) return;
  const std::uint32_t p = f.p();
  const std::uint32_t m = ((1u << 24) + p - 1) / p;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t x = std::uint32_t(c) * dst[i];
    std::uint32_t q = (x * m) >> 24;
    dst[i] = std::uint8_t(x - q * p);
  }
}

}  // namespace detail

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(std::move(field)), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, std::move(field));
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field,
                         std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field.from_int(rows[i][j]));
  }
  return m;
}

void Matrix::append_row(const std::uint8_t* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(rows_, cols.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, at(i, cols[j]));
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_ || below.field_ != field_) throw PreconditionError("stacking mismatched matrices");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) throw PreconditionError("matrix product shape mismatch");
  Matrix out(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::uint8_t* a = row(i);
    std::uint8_t* dst = out.row(i);
    for (std::size_t k = 0; k < cols_; ++k)
      if (a[k]) detail::axpy(dst, o.row(k), a[k], o.cols_, field_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
  Matrix out = *this;
  detail::axpy(out.data_.data(), o.data_.data(), 1, data_.size(), field_);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference shape mismatch");
  Matrix out = *this;
  detail::axpy(out.data_.data(), o.data_.data(), field_.neg(1), data_.size(), field_);
  return out;
}

Matrix Matrix::scaled(std::uint8_t c) const {
  Matrix out = *this;
  if (c == 0)
    std::fill(out.data_.begin(), out.data_.end(), 0);
  else
    detail::scale(out.data_.data(), c, data_.size(), field_);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<std::uint8_t> vec_times(const std::vector<std::uint8_t>& v, const Matrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("vector-matrix shape mismatch");
  std::vector<std::uint8_t> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) detail::axpy(out.data(), m.row(k), v[k], m.cols(), m.field());
  return out;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : cols_(cols), field_(std::move(field)) {
  offsets_.reserve(rows + 1);
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols(), m.field());
  std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    entries.clear();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) entries.emplace_back(std::uint32_t(j), m.at(i, j));
    s.push_row(entries);
  }
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n, PrimeField field) {
  SparseMatrix s(n, n, std::move(field));
  for (std::size_t i = 0; i < n; ++i) s.push_row({{std::uint32_t(i), 1}});
  return s;
}

void SparseMatrix::push_row(const std::vector<std::pair<std::uint32_t, std::uint8_t>>& entries) {
  for (const auto& [c, v] : entries) {
    if (c >= cols_) throw PreconditionError("sparse entry outside matrix");
    std::uint8_t r = std::uint8_t(v % field_.p());
    if (!r) continue;
    indices_.push_back(c);
    values_.push_back(r);
  }
  offsets_.push_back(values_.size());
}

void SparseMatrix::apply(const std::uint8_t* v, std::uint8_t* out) const {
  std::fill(out, out + cols_, 0);
  const std::size_t n = rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i]) continue;
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
      out[indices_[k]] = field_.add(out[indices_[k]], field_.mul(v[i], values_[k]));
  }
}

std::vector<std::uint8_t> SparseMatrix::apply(const std::vector<std::uint8_t>& v) const {
  if (v.size() != rows()) throw PreconditionError("sparse apply shape mismatch");
  std::vector<std::uint8_t> out(cols_);
  apply(v.data(), out.data());
  return out;
}

Matrix SparseMatrix::multiply(const Matrix& x) const {
  if (x.rows() != cols_) throw PreconditionError("sparse product shape mismatch");
  Matrix out(rows(), x.cols(), field_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
      detail::axpy(out.row(i), x.row(indices_[k]), values_[k], x.cols(), field_);
  return out;
}

Matrix SparseMatrix::left_multiply(const Matrix& x) const {
  if (x.cols() != rows()) throw PreconditionError("sparse product shape mismatch");
  Matrix out(x.rows(), cols_, field_);
  for (std::size_t r = 0; r < x.rows(); ++r) apply(x.row(r), out.row(r));
  return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& then) const {
  if (cols_ != then.rows()) throw PreconditionError("sparse compose shape mismatch");
  SparseMatrix out(rows(), then.cols(), field_);
  std::vector<std::uint8_t> acc(then.cols(), 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;
  for (std::size_t i = 0; i < rows(); ++i) {
    touched.clear();
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
      then.for_row(indices_[k], [&](std::uint32_t c, std::uint8_t v) {
        if (!acc[c]) touched.push_back(c);
        acc[c] = field_.add(acc[c], field_.mul(values_[k], v));
      });
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    entries.clear();
    for (auto c : touched) {
      if (acc[c]) entries.emplace_back(c, acc[c]);
      acc[c] = 0;
    }
    out.push_row(entries);
  }
  return out;
}

Matrix SparseMatrix::dense() const {
  Matrix m(rows(), cols_, field_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) m.set(i, indices_[k], values_[k]);
  return m;
}

// ---------------------------------------------------------------- elimination

RowEchelon rref(Matrix m) {
  const PrimeField f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t i = r;
    while (i < rows && m.at(i, c) == 0) ++i;
    if (i == rows) continue;
    if (i != r) std::swap_ranges(m.row(i), m.row(i) + cols, m.row(r));
    detail::scale(m.row(r) + c, f.inv(m.at(r, c)), cols - c, f);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r) continue;
      std::uint8_t v = m.at(k, c);
      if (v) detail::axpy(m.row(k) + c, m.row(r) + c, f.neg(v), cols - c, f);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

EchelonBuilder::EchelonBuilder(std::size_t ambient, PrimeField field)
    : ambient_(ambient), field_(std::move(field)), pivot_owner_(ambient, -1) {}

void EchelonBuilder::reduce(std::uint8_t* v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (v[c]) detail::axpy(v + c, row(i) + c, field_.neg(v[c]), ambient_ - c, field_);
  }
}

bool EchelonBuilder::contains(const std::uint8_t* v) const {
  std::vector<std::uint8_t> w(v, v + ambient_);
  reduce(w.data());
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool EchelonBuilder::insert(std::vector<std::uint8_t> v) {
  if (v.size() != ambient_) throw PreconditionError("vector length does not match ambient dimension");
  reduce(v.data());
  auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
  if (it == v.end()) return false;
  std::size_t c = std::size_t(it - v.begin());
  detail::scale(v.data() + c, field_.inv(v[c]), ambient_ - c, field_);
  rows_.insert(rows_.end(), v.begin(), v.end());
  pivot_owner_[c] = std::int32_t(pivots_.size());
  pivots_.push_back(c);
  return true;
}

LinearSolver::LinearSolver(const Matrix& a)
    : n_(a.rows()), m_(a.cols()), field_(a.field()), kernel_(0, a.rows(), a.field()) {
  const std::size_t w = m_ + n_;
  std::vector<std::uint8_t> v(w);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(v.begin(), v.end(), 0);
    std::copy(a.row(i), a.row(i) + m_, v.begin());
    v[m_ + i] = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (v[c]) detail::axpy(v.data() + c, rows_.data() + k * w + c, field_.neg(v[c]), w - c, field_);
    }
    std::size_t c = 0;
    while (c < m_ && v[c] == 0) ++c;
    if (c == m_) {
      kernel_.append_row(v.data() + m_);
      continue;
    }
    detail::scale(v.data() + c, field_.inv(v[c]), w - c, field_);
    rows_.insert(rows_.end(), v.begin(), v.end());
    pivots_.push_back(c);
  }
}

std::optional<std::vector<std::uint8_t>> LinearSolver::solve(const std::vector<std::uint8_t>& b) const {
  if (b.size() != m_) throw PreconditionError("right-hand side has wrong length");
  const std::size_t w = m_ + n_;
  std::vector<std::uint8_t> v(w, 0);
  std::copy(b.begin(), b.end(), v.begin());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    std::size_t c = pivots_[k];
    if (v[c]) detail::axpy(v.data() + c, rows_.data() + k * w + c, field_.neg(v[c]), w - c, field_);
  }
  for (std::size_t c = 0; c < m_; ++c)
    if (v[c]) return std::nullopt;
  std::vector<std::uint8_t> x(v.begin() + m_, v.end());
  for (auto& e : x) e = field_.neg(e);
  return x;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, PrimeField field)
    : ambient_(ambient), field_(field), basis_(0, ambient, field) {}

Subspace Subspace::span(const Matrix& generators) {
  RowEchelon e = rref(generators);
  Subspace s(generators.cols(), generators.field());
  e.form.resize_rows(e.rank);
  s.basis_ = std::move(e.form);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const EchelonBuilder& builder) {
  Matrix m(0, builder.ambient(), builder.field());
  for (std::size_t i = 0; i < builder.rank(); ++i) m.append_row(builder.row(i));
  return span(m);
}

Subspace Subspace::full(std::size_t ambient, PrimeField field) {
  Subspace s(ambient, field);
  s.basis_ = Matrix::identity(ambient, field);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  if (pivots.size() != basis.rows()) throw PreconditionError("pivot list does not match basis");
  Subspace s(basis.cols(), basis.field());
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

void Subspace::reduce(std::uint8_t* v) const {
  for (std::size_t s = 0; s < pivots_.size(); ++s) {
    std::size_t c = pivots_[s];
    if (v[c]) detail::axpy(v + c, basis_.row(s) + c, field_.neg(v[c]), ambient_ - c, field_);
  }
}

bool Subspace::contains(const std::uint8_t* v) const {
  if (is_full()) return true;
  std::vector<std::uint8_t> w(v, v + ambient_);
  reduce(w.data());
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<std::uint8_t> Subspace::coordinates(const std::uint8_t* v) const {
  std::vector<std::uint8_t> out(pivots_.size());
  for (std::size_t s = 0; s < pivots_.size(); ++s) out[s] = v[pivots_[s]];
  return out;
}

std::optional<std::vector<std::uint8_t>> Subspace::try_coordinates(const std::uint8_t* v) const {
  if (!contains(v)) return std::nullopt;
  return coordinates(v);
}

std::vector<std::uint8_t> Subspace::vector_from(const std::vector<std::uint8_t>& coords) const {
  if (coords.size() != dim()) throw PreconditionError("coordinate vector has wrong length");
  return vec_times(coords, basis_);
}

bool Subspace::is_invariant(const SparseMatrix& g) const {
  std::vector<std::uint8_t> w(ambient_);
  for (std::size_t s = 0; s < dim(); ++s) {
    g.apply(basis_.row(s), w.data());
    if (!contains(w.data())) return false;
  }
  return true;
}

Matrix Subspace::restricted_action(const SparseMatrix& g) const {
  if (g.rows() != ambient_ || g.cols() != ambient_) throw PreconditionError("operator does not act on the ambient space");
  Matrix out(dim(), dim(), field_);
  std::vector<std::uint8_t> w(ambient_);
  for (std::size_t s = 0; s < dim(); ++s) {
    g.apply(basis_.row(s), w.data());
    auto c = try_coordinates(w.data());
    if (!c) throw PreconditionError("subspace is not invariant under the operator");
    std::copy(c->begin(), c->end(), out.row(s));
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw PreconditionError("sum of subspaces of different spaces");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw PreconditionError("intersection of subspaces of different spaces");
  const Subspace& small = a.dim() <= b.dim() ? a : b;
  const Subspace& big = a.dim() <= b.dim() ? b : a;
  if (small.dim() == 0) return Subspace(a.ambient_dim(), a.field());
  if (big.is_full()) return small;
  Matrix residues = small.basis();
  for (std::size_t i = 0; i < residues.rows(); ++i) big.reduce(residues.row(i));
  LinearSolver solver(residues);
  return Subspace::span(solver.left_kernel() * small.basis());
}

bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& whole) {
  std::size_t total = 0;
  Subspace acc(whole.ambient_dim(), whole.field());
  for (const auto& s : parts) {
    total += s.dim();
    acc = sum(acc, s);
  }
  return total == whole.dim() && acc == whole;
}

Subspace image(const Subspace& s, const SparseMatrix& g) { return Subspace::span(g.left_multiply(s.basis())); }

Subspace in_coordinates(const Subspace& s, const Subspace& container) {
  Matrix m(0, container.dim(), container.field());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto c = container.try_coordinates(s.basis().row(i));
    if (!c) throw PreconditionError("subspace is not contained in the container");
    m.append_row(*c);
  }
  return Subspace::span(m);
}

Subspace from_coordinates(const Subspace& coords, const Subspace& container) {
  if (coords.ambient_dim() != container.dim()) throw PreconditionError("coordinate space mismatch");
  return Subspace::span(coords.basis() * container.basis());
}

// ---------------------------------------------------------------- actions

GroupAction::GroupAction(std::size_t dim, PrimeField field, std::vector<SparseMatrix> generators,
                         bool check_invertible)
    : dim_(dim), field_(std::move(field)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.rows() != dim_ || g.cols() != dim_ || g.field() != field_)
      throw PreconditionError("group generator has the wrong shape or field");
    if (check_invertible && rref(g.dense()).rank != dim_)
      throw PreconditionError("group generator is not invertible");
  }
}

void GroupAction::set_sylow(CyclicSylow s) {
  if (s.generator.rows() != dim_) throw PreconditionError("Sylow generator has the wrong shape");
  if (s.coset_reps.empty()) throw PreconditionError("coset representatives are required");
  if (s.coset_reps.size() % field_.p() == 0) throw PreconditionError("coset count must be prime to p");
  sylow_ = std::move(s);
}

}  // namespace liepowers
