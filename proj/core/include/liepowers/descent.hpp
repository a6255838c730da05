// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "liepowers/combinat.hpp"
#include "liepowers/freelie.hpp"
#include "liepowers/linalg.hpp"

namespace liepowers {

/* Permutations of {0..r-1} in one-line form: perm[i] is the image of i.
   They act on words by place permutation, (sigma w)_i = w_(perm[i]), and the
   group-algebra product is composition of these actions:
   (sigma * tau)[i] = tau[sigma[i]]. */
using Permutation = std::vector<int>;

std::uint32_t descent_mask(const Permutation& perm);  // bit i-1 set when perm[i-1] > perm[i]
Permutation compose(const Permutation& sigma, const Permutation& tau);
std::uint64_t factorial(int r);
std::uint64_t permutation_rank(const Permutation& perm);  // lexicographic rank
Permutation permutation_unrank(std::uint64_t rank, int r);
// All permutations whose descent set lies in the partial sums of the composition with this mask.
std::vector<Permutation> descent_class_members(int r, std::uint32_t mask);

// Coefficient rings: F_p for the main computations, Q for characteristic-zero cross-checks.
struct FpRing {
  std::uint32_t p = 2;
  using value_type = std::uint32_t;
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    long long m = v % (long long)p;
    return value_type(m < 0 ? m + p : m);
  }
  value_type from_count(std::uint64_t v) const { return value_type(v % p); }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return value_type((std::uint64_t(a) * b) % p); }
  bool is_zero(value_type a) const { return a == 0; }
  friend bool operator==(const FpRing& a, const FpRing& b) { return a.p == b.p; }
};

struct RationalRing {
  using value_type = boost::multiprecision::cpp_rational;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_count(std::uint64_t v) const { return value_type(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/* Structure constants X^nu X^mu = sum over non-negative integer matrices A with
   row sums nu and column sums mu of X^(row-major reading of A, zeros dropped).
   Entries are (result mask, multiplicity), cached per (r, nu, mu). */
const std::vector<std::pair<std::uint32_t, std::uint64_t>>& descent_structure_constants(int r, std::uint32_t nu,
                                                                                         std::uint32_t mu);

/* An element sum_nu c_nu X^nu of the descent algebra D_r, coefficients indexed
   by composition mask. */
template <class Ring>
class BasicDescentElement {
 public:
  using value_type = typename Ring::value_type;

  BasicDescentElement() = default;
  BasicDescentElement(int r, Ring ring) : r_(r), ring_(ring), c_(std::size_t(1) << (r - 1), ring.zero()) {
    if (r < 1 || r > 16) throw PreconditionError("descent algebra degree must be between 1 and 16");
  }
  static BasicDescentElement basis(int r, std::uint32_t mask, Ring ring) {
    BasicDescentElement e(r, ring);
    e.c_.at(mask) = ring.one();
    return e;
  }
  static BasicDescentElement basis(const Composition& c, Ring ring) {
    return basis(c.size(), composition_mask(c), ring);
  }
  static BasicDescentElement one(int r, Ring ring) { return basis(r, 0, ring); }

  int degree() const { return r_; }
  const Ring& ring() const { return ring_; }
  std::size_t size() const { return c_.size(); }
  const value_type& coeff(std::uint32_t mask) const { return c_.at(mask); }
  void set(std::uint32_t mask, value_type v) { c_.at(mask) = std::move(v); }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!ring_.is_zero(v)) return false;
    return true;
  }

  BasicDescentElement operator+(const BasicDescentElement& o) const {
    check(o);
    BasicDescentElement out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ring_.add(c_[i], o.c_[i]);
    return out;
  }
  BasicDescentElement operator-(const BasicDescentElement& o) const {
    check(o);
    BasicDescentElement out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ring_.sub(c_[i], o.c_[i]);
    return out;
  }
  BasicDescentElement scaled(const value_type& s) const {
    BasicDescentElement out = *this;
    for (auto& v : out.c_) v = ring_.mul(v, s);
    return out;
  }
  BasicDescentElement operator*(const BasicDescentElement& o) const {
    check(o);
    BasicDescentElement out(r_, ring_);
    for (std::uint32_t a = 0; a < c_.size(); ++a) {
      if (ring_.is_zero(c_[a])) continue;
      for (std::uint32_t b = 0; b < c_.size(); ++b) {
        if (ring_.is_zero(o.c_[b])) continue;
        value_type ab = ring_.mul(c_[a], o.c_[b]);
        for (const auto& [m, count] : descent_structure_constants(r_, a, b))
          out.c_[m] = ring_.add(out.c_[m], ring_.mul(ab, ring_.from_count(count)));
      }
    }
    return out;
  }
  friend bool operator==(const BasicDescentElement& a, const BasicDescentElement& b) {
    return a.r_ == b.r_ && a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  // Coefficient of every permutation when expanded in the group algebra.
  std::vector<value_type> permutation_coefficients() const {
    // Superset sums over descent masks: sigma appears in X^nu iff Des(sigma) is inside S(nu).
    std::vector<value_type> sup = c_;
    const int bits = r_ - 1;
    for (int b = 0; b < bits; ++b)
      for (std::uint32_t m = 0; m < sup.size(); ++m)
        if (!(m & (1u << b))) sup[m] = ring_.add(sup[m], sup[m | (1u << b)]);
    std::vector<value_type> out(factorial(r_), ring_.zero());
    for (std::uint64_t k = 0; k < out.size(); ++k) out[k] = sup[descent_mask(permutation_unrank(k, r_))];
    return out;
  }

 private:
  void check(const BasicDescentElement& o) const {
    if (o.r_ != r_ || !(o.ring_ == ring_)) throw PreconditionError("descent elements from different algebras");
  }
  int r_ = 1;
  Ring ring_{};
  std::vector<value_type> c_;
};

using DescentElement = BasicDescentElement<FpRing>;
using RationalDescentElement = BasicDescentElement<RationalRing>;

/* Reference group algebra of Sym(r), dense over all r! permutations. */
template <class Ring>
class GroupAlgebraElement {
 public:
  using value_type = typename Ring::value_type;
  GroupAlgebraElement(int r, Ring ring) : r_(r), ring_(ring), c_(factorial(r), ring.zero()) {
    if (r < 1 || r > 8) throw PreconditionError("group algebra oracle supports r <= 8");
  }
  static GroupAlgebraElement from_descent(const BasicDescentElement<Ring>& e) {
    GroupAlgebraElement g(e.degree(), e.ring());
    g.c_ = e.permutation_coefficients();
    return g;
  }
  const value_type& coeff(const Permutation& p) const { return c_[permutation_rank(p)]; }
  void add_term(const Permutation& p, const value_type& v) {
    auto k = permutation_rank(p);
    c_[k] = ring_.add(c_[k], v);
  }
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out(r_, ring_);
    std::vector<Permutation> perms;
    for (std::uint64_t k = 0; k < c_.size(); ++k) perms.push_back(permutation_unrank(k, r_));
    for (std::uint64_t a = 0; a < c_.size(); ++a) {
      if (ring_.is_zero(c_[a])) continue;
      for (std::uint64_t b = 0; b < c_.size(); ++b) {
        if (ring_.is_zero(o.c_[b])) continue;
        auto k = permutation_rank(compose(perms[a], perms[b]));
        out.c_[k] = ring_.add(out.c_[k], ring_.mul(c_[a], o.c_[b]));
      }
    }
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.c_ == b.c_; }

 private:
  int r_;
  Ring ring_;
  std::vector<value_type> c_;
};

/* The algebra map c: D_r -> functions on partitions of r, X^nu -> phi^nu. Values are
   listed over partitions(r) in increasing lexicographic order. */
template <class Ring>
std::vector<typename Ring::value_type> c_map(const BasicDescentElement<Ring>& e) {
  const int r = e.degree();
  auto parts = partitions(r);
  std::vector<typename Ring::value_type> out(parts.size(), e.ring().zero());
  for (std::uint32_t m = 0; m < e.size(); ++m) {
    if (e.ring().is_zero(e.coeff(m))) continue;
    Composition nu = composition_from_mask(r, m);
    for (std::size_t i = 0; i < parts.size(); ++i)
      out[i] = e.ring().add(out[i], e.ring().mul(e.coeff(m), e.ring().from_count(young_character(nu, parts[i]))));
  }
  return out;
}

// dim ker c = 2^(r-1) - number of p-classes.
std::size_t c_map_kernel_dim(int r, int p);

/* Orthogonal idempotents of D_r over F_p, one per p-class, summing to 1, with
   c(e_J) the indicator of J.  Lifted class by class in order of each class's
   lexicographically smallest member; the last class takes 1 minus the rest. */
struct IdempotentFamily {
  int r = 0;
  int p = 2;
  std::vector<PClass> classes;                // sorted by key
  std::vector<DescentElement> idempotents;    // parallel to classes

  const DescentElement& of_class(const Partition& member) const;
};

IdempotentFamily lift_idempotents(int r, int p);

struct IdempotentCheck {
  bool idempotent = false;
  bool orthogonal = false;
  bool complete = false;
  bool indicators = false;
  bool ok() const { return idempotent && orthogonal && complete && indicators; }
};
IdempotentCheck check_idempotents(const IdempotentFamily& family);

// Place-permutation action on T^r(V).
Tensor act_on_tensor(const DescentElement& e, const Tensor& t);
Tensor act_on_tensor(const Permutation& sigma, const Tensor& t);
// Matrix of the action on T^r(V^(n)) (row i: image of word i).
SparseMatrix action_matrix(const DescentElement& e, int n);

/* Action on a product b_1 ... b_l of Lie elements through
   X^nu (b_1 ... b_l) = sum over q in Q(nu, mu) of the reordered product, where
   mu lists the factor degrees.  Every part of nu is multiplied by `scale`
   first, which realises D_s acting through its image in D_(scale*s) on
   products whose factor degrees are multiples of scale. */
Tensor act_on_lie_product(const DescentElement& e, int scale, const std::vector<Tensor>& factors);

// Compares the place action of X^nu on the product with the formula above.
bool gr_action_check(const Composition& nu, const std::vector<Tensor>& lie_factors);

// Text lines `coeff nu` for nonzero coefficients.
std::vector<std::string> serialize_lines(const DescentElement& e);
std::string serialize(const DescentElement& e);
DescentElement parse_descent_element(const std::string& text, int r, int p);

}  // namespace liepowers
