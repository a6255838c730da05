// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepowers/combinat.hpp"
#include "liepowers/descent.hpp"
#include "liepowers/freelie.hpp"
#include "liepowers/linalg.hpp"
#include "liepowers/modrep.hpp"

namespace liepowers {

// A mathematical invariant failed; the message names the offending object.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every complement-selection stage failed.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- idempotent splitting

struct ClassSummand {
  PClass cls;
  TensorSubspace summand;                          // e_J T^r(V)
  std::vector<std::size_t> chain_dims;             // dim e_J W_lambda over members, increasing, then 0
  std::vector<std::size_t> expected_factor_dims;   // higher_lie_dim per member
  bool pbw_images_basis = false;
};

struct FiltrationReport {
  int p = 2, n = 2, r = 1;
  std::vector<ClassSummand> classes;
};

/* Splits T^r(V^(n)) by the lifted idempotents and checks every dimension
   statement: the summands form a direct sum, e_J W_lambda / e_J W_lambda+ has
   the dimension of W_lambda / W_lambda+ for lambda in J and is zero otherwise,
   and the images of the PBW elements with shapes in J form a basis of
   e_J T^r(V).  Throws VerificationError naming the class and partition. */
FiltrationReport split_tensor_power(int n, int r, int p);

// Images e_J y of the PBW elements y with shape in J are a basis of e_J T^r(V).
bool pbw_image_check(const PbwBasis& pbw, const IdempotentFamily& family, std::size_t class_index);
bool pbw_image_check(int n, int r, int p, const PClass& cls);

// ---------------------------------------------------------------- the B family

struct Certificate {
  std::string kind;             // lie_containment, direct_sum, complement, modified_pbw_data, summand_projection, truncation
  std::string degree_or_class;
  bool passed = false;
  int stage = 0;                // complement stage that produced the checked object; 0 if not applicable
  std::string data_ref;
  std::string detail;
};

/* Data from the modified PBW basis at degree q: U' spanned by the products of
   e_[c_d, q'/d'] T^(c_d)(B_d) over the proper divisors d, the sum C of the
   L^(q/d)(B_d), and the map phi = e_[q,q'] on U' + L^q. */
struct ComplementData {
  TensorSubspace u_prime;
  TensorSubspace c;
  bool intersection_ok = false;   // U' cap L^q == C
  std::size_t phi_rank = 0;       // rank of phi on U' + L^q
  std::size_t expected_rank = 0;  // dim U' + dim L^q - dim C
  std::size_t class_dim = 0;      // sum of higher-Lie dims over cl([q,q'])
  bool genuine_idempotent = false;  // phi evaluated with the lifted idempotent of D_q itself
  bool ok() const { return intersection_ok && phi_rank == expected_rank && expected_rank == class_dim; }
};

struct DegreeResult {
  int degree = 0;
  int s = 0;
  TensorSubspace lie;     // L^q(V)
  TensorSubspace lower;   // Q(q-1) cap Q_q
  TensorSubspace u;       // U_q
  TensorSubspace w;       // W_q
  TensorSubspace b;       // B_q = U_q + W_q
  std::vector<std::pair<int, TensorSubspace>> pieces;  // (c, L^(s/c)(B_ck)) for c | s
  int stage = 0;
  std::string complement_method;    // multilinear, solver, none
  std::string certificate_method;   // dynkin, modified_pbw, solver
  Projection projection;            // T^q(V) -> B_q
  std::optional<ComplementData> complement_data;
};

struct DecompositionOptions {
  int max_search = 8;          // stage-3 attempts
  bool multilinear = true;     // allow multilinear complements for degrees <= 6
};

struct DecompositionResult {
  int p = 2, n = 2, k = 1, max_degree = 1;
  std::vector<DegreeResult> degrees;
  std::vector<Certificate> certificates;
  double timing_ms = 0;

  const DegreeResult* at_degree(int q) const;
};

/* Builds B_k, B_2k, ... up to max_degree and certifies each: B in L, the
   direct sum of the L^(s/c)(B_ck) equals L^(sk), and an equivariant
   idempotent projection T^(sk)(V) -> B_(sk).  Throws SearchExhausted if no
   stage yields a certified B. */
DecompositionResult construct_B_family(int n, int p, int k, int max_degree, const DecompositionOptions& options = {});

ComplementData canonical_complement(int q, int k, int n, int p, const std::vector<DegreeResult>& lower_degrees);

/* Re-derives every check from the B bases and projections alone. */
std::vector<Certificate> certify_decomposition(const DecompositionResult& result);

// truncate(B^(big), small.n) == B^(small) at every degree present in both.
std::vector<Certificate> check_truncation(const DecompositionResult& big, const DecompositionResult& small);

// Equivariant projection T^q(V) -> L^q(V), w -> [w]/q; requires p not dividing q.
Matrix dynkin_retraction(int n, int q, const TensorSubspace& lie);

// Feasibility cap on n^r.
constexpr std::size_t kDimensionCap = 10000;

}  // namespace liepowers
