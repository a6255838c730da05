// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liepowers/combinat.hpp"
#include "liepowers/linalg.hpp"

namespace liepowers {

/* Words over the letters 1..n.  Inside T^r(V) a word is addressed by its
   base-n index with the first letter most significant, so index order is
   lexicographic order. */
using Word = std::vector<int>;

std::size_t power(int n, int r);
std::size_t word_index(const Word& w, int n);
Word index_word(std::size_t index, int n, int r);
std::string word_string(const Word& w);
Word parse_word(const std::string& s);
// Multidegree: how often each letter occurs.
std::vector<int> word_content(const Word& w, int n);

/* An element of T^r(V) for V with basis x_1..x_n, stored densely by word index. */
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, int r, PrimeField field);
  static Tensor word(int n, const Word& w, PrimeField field, std::uint8_t coeff = 1);
  static Tensor from_vector(int n, int r, std::vector<std::uint8_t> coeffs, PrimeField field);

  int n() const { return n_; }
  int degree() const { return r_; }
  const PrimeField& field() const { return field_; }
  const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }
  std::vector<std::uint8_t>& coeffs() { return coeffs_; }
  std::uint8_t coeff(const Word& w) const { return coeffs_[word_index(w, n_)]; }
  bool is_zero() const;
  std::size_t support_size() const;
  // (word, coefficient) pairs with nonzero coefficient, in lexicographic order.
  std::vector<std::pair<Word, std::uint8_t>> terms() const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(std::uint8_t c) const;
  Tensor& add_scaled(const Tensor& o, std::uint8_t c);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  int r_ = 0;
  PrimeField field_;
  std::vector<std::uint8_t> coeffs_;
};

Tensor product(const Tensor& a, const Tensor& b);
Tensor product(const std::vector<const Tensor*>& factors);
Tensor bracket(const Tensor& a, const Tensor& b);
// [a_1, a_2, ..., a_k] = [[...[a_1, a_2], ...], a_k]
Tensor left_normed_bracket(const std::vector<Tensor>& factors);

/* A subspace of T^r(V) for dim V = n. */
struct TensorSubspace {
  int n = 0;
  int degree = 0;
  Subspace space;

  TensorSubspace() = default;
  TensorSubspace(int n_, int degree_, Subspace s);
  static TensorSubspace zero(int n, int degree, PrimeField field);
  static TensorSubspace full(int n, int degree, PrimeField field);
  static TensorSubspace span(int n, int degree, const std::vector<Tensor>& elements, PrimeField field);

  std::size_t dim() const { return space.dim(); }
  const PrimeField& field() const { return space.field(); }
  Tensor basis_element(std::size_t i) const;
  std::vector<Tensor> basis_elements() const;
  bool contains(const Tensor& t) const;
  friend bool operator==(const TensorSubspace& a, const TensorSubspace& b) {
    return a.n == b.n && a.degree == b.degree && a.space == b.space;
  }
};

TensorSubspace sum(const TensorSubspace& a, const TensorSubspace& b);
TensorSubspace intersect(const TensorSubspace& a, const TensorSubspace& b);
TensorSubspace bracket_span(const TensorSubspace& a, const TensorSubspace& b);
TensorSubspace product_span(const TensorSubspace& a, const TensorSubspace& b);

// Lyndon words of length r over 1..n in lexicographic order.
std::vector<Word> lyndon_words(int n, int r);
bool is_lyndon(const Word& w);
// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
// Bracketing of a Lyndon word along its standard factorization.
Tensor lyndon_bracket(const Word& w, int n, PrimeField field);
std::vector<Tensor> lyndon_basis(int n, int r, PrimeField field);
TensorSubspace lie_power(int n, int r, PrimeField field);

/* Lie subalgebra generated by homogeneous pieces: degree-d part is
   G_d + sum_e [A_(d-e), G_e].  Result index d-1 holds degree d. */
std::vector<TensorSubspace> subalgebra_generated(const std::vector<TensorSubspace>& generators, int max_degree);

/* Elimination pieces [X, B, ..., B] with m copies of B, for every m >= 0
   with deg X + m deg B <= max_degree. */
struct LazardPiece {
  std::size_t source = 0;  // index into the X list
  int copies = 0;          // number of B factors
  TensorSubspace space;
};
std::vector<LazardPiece> lazard_pieces(const std::vector<TensorSubspace>& xs, const TensorSubspace& b,
                                       int max_degree);

// Sets every word using a letter above n_target to zero and re-indexes.
Tensor truncate(const Tensor& t, int n_target);
TensorSubspace truncate(const TensorSubspace& s, int n_target);
// Embeds into n_target >= n letters and closes under all letter permutations.
TensorSubspace symmetrize_extend(const TensorSubspace& s, int n_target);
// Image of s under the projection onto words of content alpha.
TensorSubspace weight_component(const TensorSubspace& s, const std::vector<int>& alpha);
// Sparse matrix of the letter substitution x_i -> x_(perm[i-1]) on T^r.
SparseMatrix letter_permutation(int n, int r, const std::vector<int>& perm, PrimeField field);

/* Text format: a header line `p n r`, then one basis vector per line written
   as `coeff word` pairs (letters 1..n, n <= 9).  Lines starting with # are comments. */
std::string serialize(const TensorSubspace& s);
std::vector<std::string> serialize_lines(const TensorSubspace& s);
TensorSubspace parse_tensor_subspace(const std::string& text);

/* PBW generators are ordered by degree, then by the caller's block label,
   then lexicographically by coefficient vector. */
struct PbwGenerator {
  Tensor element;
  int block = 0;
};

class PbwBasis {
 public:
  // Lyndon generators of every degree up to r.
  PbwBasis(int n, int r, PrimeField field);
  // Caller-provided homogeneous generators; each degree must hold a basis of L^d.
  PbwBasis(int n, int r, std::vector<PbwGenerator> generators);

  int n() const { return n_; }
  int degree() const { return r_; }
  const PrimeField& field() const { return field_; }
  const std::vector<PbwGenerator>& generators() const { return gens_; }

  struct Element {
    std::vector<std::size_t> factors;  // non-decreasing generator indices
    Partition shape;                   // sorted factor degrees
  };
  const std::vector<Element>& elements() const { return elements_; }
  Tensor expand(const Element& e) const;
  const Tensor& expanded(std::size_t i) const { return expanded_[i]; }
  // Indices of the elements of a given shape.
  std::vector<std::size_t> shape_elements(const Partition& lambda) const;

 private:
  void build();
  int n_, r_;
  PrimeField field_;
  std::vector<PbwGenerator> gens_;
  std::vector<Element> elements_;
  std::vector<Tensor> expanded_;
};

struct FiltrationLevel {
  Partition lambda;
  std::size_t dim = 0;         // dim W_lambda
  std::size_t factor_dim = 0;  // dim W_lambda / W_lambda+
};
// Levels from (r) down to (1^r); W_lambda is spanned by all shapes >= lambda.
std::vector<FiltrationLevel> filtration(const PbwBasis& basis);
TensorSubspace filtration_subspace(const PbwBasis& basis, const Partition& lambda);
// W_lambda+ (all shapes strictly above lambda).
TensorSubspace filtration_subspace_above(const PbwBasis& basis, const Partition& lambda);

}  // namespace liepowers
