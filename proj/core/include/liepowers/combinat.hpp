// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liepowers {

/* Positive parts in non-increasing order. */
struct Partition {
  std::vector<int> parts;
  int size() const;
  std::size_t length() const { return parts.size(); }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
};

/* Positive parts in any order. */
struct Composition {
  std::vector<int> parts;
  int size() const;
  std::size_t length() const { return parts.size(); }
  friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
};

// Both throw PreconditionError on non-positive parts (and, for partitions, wrong order).
Partition make_partition(std::vector<int> parts);
Composition make_composition(std::vector<int> parts);

// Lexicographic order on the part sequences: (1^r) is smallest, (r) largest.
bool lex_less(const Partition& a, const Partition& b);
struct LexLess {
  bool operator()(const Partition& a, const Partition& b) const { return lex_less(a, b); }
};

// All partitions of r in increasing lexicographic order.
std::vector<Partition> partitions(int r);
std::optional<Partition> next_partition(const Partition& l);

/* Compositions of r are indexed by the set of their partial sums,
   encoded as a bitmask over {1, ..., r-1} (bit s-1 for partial sum s). */
std::uint32_t composition_mask(const Composition& c);
Composition composition_from_mask(int r, std::uint32_t mask);
// All 2^(r-1) compositions of r, ordered by mask.
std::vector<Composition> compositions(int r);

Partition associated_partition(const Composition& c);
// True when the parts of `fine` can be grouped into blocks summing to the parts of `coarse`.
bool is_refinement(const Partition& fine, const Partition& coarse);

/* Each part p^a * l (p not dividing l) is replaced by p^a parts equal to l.
   Two partitions are p-equivalent exactly when these agree. */
Partition stabilized_cycle_type(const Partition& l, int p);

struct PClass {
  Partition key;                   // common stabilized cycle type
  std::vector<Partition> members;  // increasing lexicographic order
};
// Classes sorted by key in lexicographic order.
std::vector<PClass> p_equiv_classes(int r, int p);
// Index into p_equiv_classes(l.size(), p) of the class containing l.
std::size_t p_class_index(const std::vector<PClass>& classes, const Partition& l);

/* Number of ordered set partitions (I_1, ..., I_k) of {1, ..., len(mu)} with
   sum of mu_i over I_j equal to nu_j. */
std::uint64_t count_Q(const Composition& nu, const std::vector<int>& mu);
// Value at a permutation of cycle type lambda of the character induced from
// the trivial character of the Young subgroup of shape nu.
std::uint64_t young_character(const Composition& nu, const Partition& lambda);

std::int64_t mobius(int n);
// Dimension of the degree-r component of the free Lie algebra on n generators.
std::uint64_t witt_dim(int n, int r);
// Product over i of binom(witt_dim(n, i) + m_i - 1, m_i), m_i the multiplicity of i.
std::uint64_t higher_lie_dim(int n, const Partition& lambda);

std::string to_string(const Partition& l);
std::string to_string(const Composition& c);
Partition parse_partition(const std::string& s);
Composition parse_composition(const std::string& s);

}  // namespace liepowers
