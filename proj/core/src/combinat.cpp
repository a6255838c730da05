// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "liepowers/linalg.hpp"

namespace liepowers {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw PreconditionError("partition parts must be non-increasing");
  }
  return Partition{std::move(parts)};
}

Composition make_composition(std::vector<int> parts) {
  for (int v : parts)
    if (v <= 0) throw PreconditionError("composition parts must be positive");
  return Composition{std::move(parts)};
}

bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

std::vector<Partition> partitions(int r) {
  if (r < 0) throw PreconditionError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int v = 1; v <= std::min(left, maxpart); ++v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(r, r);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::optional<Partition> next_partition(const Partition& l) {
  // Lexicographic successor: find the rightmost position that can grow.
  const std::vector<int>& a = l.parts;
  int r = l.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    int prefix = 0;
    for (std::size_t j = 0; j < i; ++j) prefix += a[j];
    int bound = i == 0 ? r : a[i - 1];
    int v = a[i] + 1;
    if (v > bound || prefix + v > r) continue;
    // Smallest completion: fill with ones.
    std::vector<int> out(a.begin(), a.begin() + std::ptrdiff_t(i));
    out.push_back(v);
    for (int rest = r - prefix - v; rest > 0; --rest) out.push_back(1);
    return Partition{out};
  }
  return std::nullopt;
}

std::uint32_t composition_mask(const Composition& c) {
  std::uint32_t mask = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    s += c.parts[i];
    mask |= 1u << (s - 1);
  }
  return mask;
}

Composition composition_from_mask(int r, std::uint32_t mask) {
  Composition c;
  int last = 0;
  for (int s = 1; s < r; ++s)
    if (mask & (1u << (s - 1))) {
      c.parts.push_back(s - last);
      last = s;
    }
  c.parts.push_back(r - last);
  return c;
}

std::vector<Composition> compositions(int r) {
  if (r < 1 || r > 31) throw PreconditionError("compositions need 1 <= r <= 31");
  std::vector<Composition> out;
  for (std::uint32_t m = 0; m < (1u << (r - 1)); ++m) out.push_back(composition_from_mask(r, m));
  return out;
}

Partition associated_partition(const Composition& c) {
  Partition l{c.parts};
  std::sort(l.parts.begin(), l.parts.end(), std::greater<int>());
  return l;
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::vector<int> bins = coarse.parts;
  const std::vector<int>& items = fine.parts;  // non-increasing, which prunes well
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == items.size()) return true;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (bins[b] < items[i]) continue;
      bool seen = false;  // skip bins with the same remaining capacity
      for (std::size_t e = 0; e < b; ++e)
        if (bins[e] == bins[b]) seen = true;
      if (seen) continue;
      bins[b] -= items[i];
      bool ok = place(i + 1);
      bins[b] += items[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

Partition stabilized_cycle_type(const Partition& l, int p) {
  Partition out;
  for (int part : l.parts) {
    int q = 1, rest = part;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    for (int k = 0; k < q; ++k) out.parts.push_back(rest);
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
  return out;
}

std::vector<PClass> p_equiv_classes(int r, int p) {
  if (!is_prime(std::uint64_t(p))) throw PreconditionError("p must be prime");
  std::vector<PClass> out;
  for (const Partition& l : partitions(r)) {
    Partition key = stabilized_cycle_type(l, p);
    auto it = std::find_if(out.begin(), out.end(), [&](const PClass& c) { return c.key == key; });
    if (it == out.end())
      out.push_back(PClass{key, {l}});
    else
      it->members.push_back(l);
  }
  std::sort(out.begin(), out.end(), [](const PClass& a, const PClass& b) { return lex_less(a.key, b.key); });
  return out;
}

std::size_t p_class_index(const std::vector<PClass>& classes, const Partition& l) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& m : classes[i].members)
      if (m == l) return i;
  throw PreconditionError("partition " + to_string(l) + " is not in any class");
}

std::uint64_t count_Q(const Composition& nu, const std::vector<int>& mu) {
  const std::size_t l = mu.size();
  if (l > 24) throw PreconditionError("count_Q supports at most 24 factors");
  int total = std::accumulate(mu.begin(), mu.end(), 0);
  if (total != nu.size()) return 0;
  const std::uint32_t full = (l == 32) ? ~0u : ((1u << l) - 1);
  std::vector<int> subset_sum(std::size_t(1) << l, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    int low = __builtin_ctz(m);
    subset_sum[m] = subset_sum[m & (m - 1)] + mu[std::size_t(low)];
  }
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::uint32_t)> rec = [&](std::size_t j, std::uint32_t used) -> std::uint64_t {
    if (j == nu.parts.size()) return used == full ? 1 : 0;
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    std::uint64_t count = 0;
    std::uint32_t rest = full & ~used;
    for (std::uint32_t s = rest; s; s = (s - 1) & rest)
      if (subset_sum[s] == nu.parts[j]) count += rec(j + 1, used | s);
    memo[used] = count;
    return count;
  };
  return rec(0, 0);
}

std::uint64_t young_character(const Composition& nu, const Partition& lambda) {
  return count_Q(nu, lambda.parts);
}

std::int64_t mobius(int n) {
  if (n < 1) throw PreconditionError("mobius needs a positive argument");
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t witt_dim(int n, int r) {
  if (n < 1 || r < 1) throw PreconditionError("witt_dim needs n >= 1 and r >= 1");
  __int128 total = 0;
  for (int d = 1; d <= r; ++d) {
    if (r % d) continue;
    __int128 pw = 1;
    for (int k = 0; k < r / d; ++k) pw *= n;
    total += mobius(d) * pw;
  }
  return std::uint64_t(total / r);
}

std::uint64_t higher_lie_dim(int n, const Partition& lambda) {
  std::uint64_t result = 1;
  std::size_t i = 0;
  while (i < lambda.parts.size()) {
    int part = lambda.parts[i];
    std::uint64_t m = 0;
    while (i < lambda.parts.size() && lambda.parts[i] == part) {
      ++m;
      ++i;
    }
    // binom(w + m - 1, m), computed incrementally to stay exact.
    std::uint64_t w = witt_dim(n, part);
    unsigned __int128 b = 1;
    for (std::uint64_t k = 1; k <= m; ++k) b = b * (w + k - 1) / k;
    result *= std::uint64_t(b);
  }
  return result;
}

namespace {
std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}
std::vector<int> split(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw PreconditionError("bad part '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw PreconditionError("cannot parse '" + s + "' as a list of parts");
    }
  }
  if (out.empty()) throw PreconditionError("empty part list");
  return out;
}
}  // namespace

std::string to_string(const Partition& l) { return join(l.parts); }
std::string to_string(const Composition& c) { return join(c.parts); }
Partition parse_partition(const std::string& s) { return make_partition(split(s)); }
Composition parse_composition(const std::string& s) { return make_composition(split(s)); }

}  // namespace liepowers
