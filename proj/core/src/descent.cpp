// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/descent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace liepowers {

std::uint32_t descent_mask(const Permutation& perm) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    if (perm[i] > perm[i + 1]) m |= 1u << i;
  return m;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw PreconditionError("composing permutations of different degrees");
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = tau[std::size_t(sigma[i])];
  return out;
}

std::uint64_t factorial(int r) {
  std::uint64_t f = 1;
  for (int i = 2; i <= r; ++i) f *= std::uint64_t(i);
  return f;
}

std::uint64_t permutation_rank(const Permutation& perm) {
  const int r = int(perm.size());
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < r; ++i) {
    int v = perm[std::size_t(i)];
    int smaller = __builtin_popcount(~used & ((1u << v) - 1));
    rank += std::uint64_t(smaller) * factorial(r - 1 - i);
    used |= 1u << v;
  }
  return rank;
}

Permutation permutation_unrank(std::uint64_t rank, int r) {
  Permutation out(static_cast<std::size_t>(r));
  std::vector<int> avail(static_cast<std::size_t>(r));
  std::iota(avail.begin(), avail.end(), 0);
  for (int i = 0; i < r; ++i) {
    std::uint64_t f = factorial(r - 1 - i);
    std::size_t k = std::size_t(rank / f);
    rank %= f;
    out[std::size_t(i)] = avail[k];
    avail.erase(avail.begin() + std::ptrdiff_t(k));
  }
  return out;
}

std::vector<Permutation> descent_class_members(int r, std::uint32_t mask) {
  if (r > 10) throw PreconditionError("permutation expansion supports r <= 10");
  std::vector<Permutation> out;
  Permutation p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  do {
    if ((descent_mask(p) & ~mask) == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------- structure constants

namespace {

std::vector<std::pair<std::uint32_t, std::uint64_t>> compute_constants(int r, std::uint32_t nu_mask,
                                                                      std::uint32_t mu_mask) {
  Composition nu = composition_from_mask(r, nu_mask), mu = composition_from_mask(r, mu_mask);
  const std::size_t k = nu.length(), l = mu.length();
  std::vector<int> row_left(nu.parts), col_left(mu.parts);
  std::map<std::uint32_t, std::uint64_t> acc;
  // Fill cell (i, j) row-major; `sum` is the running partial sum of the reading.
  std::function<void(std::size_t, std::size_t, int, std::uint32_t)> fill = [&](std::size_t i, std::size_t j, int sum,
                                                                              std::uint32_t mask) {
    if (i == k) {
      ++acc[mask];
      return;
    }
    if (j == l) {
      if (row_left[i] == 0) fill(i + 1, 0, sum, mask);
      return;
    }
    int hi = std::min(row_left[i], col_left[j]);
    int lo = (j + 1 == l) ? row_left[i] : 0;  // the last column takes what is left
    for (int a = lo; a <= hi; ++a) {
      row_left[i] -= a;
      col_left[j] -= a;
      std::uint32_t m = mask;
      int s = sum + a;
      if (a > 0 && s < r) m |= 1u << (s - 1);
      fill(i, j + 1, s, m);
      row_left[i] += a;
      col_left[j] += a;
    }
  };
  fill(0, 0, 0, 0);
  return {acc.begin(), acc.end()};
}

}  // namespace

const std::vector<std::pair<std::uint32_t, std::uint64_t>>& descent_structure_constants(int r, std::uint32_t nu,
                                                                                         std::uint32_t mu) {
  static std::mutex lock;
  static std::map<int, std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>> tables;
  static std::map<int, std::vector<bool>> ready;
  std::lock_guard<std::mutex> guard(lock);
  const std::size_t size = std::size_t(1) << (r - 1);
  auto& table = tables[r];
  auto& done = ready[r];
  if (table.empty()) {
    table.resize(size * size);
    done.assign(size * size, false);
  }
  const std::size_t key = std::size_t(nu) * size + mu;
  if (!done[key]) {
    table[key] = compute_constants(r, nu, mu);
    done[key] = true;
  }
  return table[key];
}

std::size_t c_map_kernel_dim(int r, int p) {
  return (std::size_t(1) << (r - 1)) - p_equiv_classes(r, p).size();
}

// ---------------------------------------------------------------- idempotents

const DescentElement& IdempotentFamily::of_class(const Partition& member) const {
  return idempotents.at(p_class_index(classes, member));
}

IdempotentFamily lift_idempotents(int r, int p) {
  if (r < 1 || r > 12) throw PreconditionError("idempotent lifting supports 1 <= r <= 12");
  const PrimeField field(static_cast<std::uint32_t>(p));
  const FpRing ring{std::uint32_t(p)};
  IdempotentFamily fam;
  fam.r = r;
  fam.p = p;
  fam.classes = p_equiv_classes(r, p);
  const auto parts = partitions(r);
  const std::size_t ncomp = std::size_t(1) << (r - 1);

  // c as a matrix: row = composition, column = partition.
  Matrix cm(ncomp, parts.size(), field);
  for (std::uint32_t m = 0; m < ncomp; ++m) {
    Composition nu = composition_from_mask(r, m);
    for (std::size_t j = 0; j < parts.size(); ++j) cm.set(m, j, std::uint8_t(young_character(nu, parts[j]) % std::uint64_t(p)));
  }
  LinearSolver solver(cm);

  std::vector<std::size_t> order(fam.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(fam.classes[a].members.front(), fam.classes[b].members.front());
  });

  fam.idempotents.assign(fam.classes.size(), DescentElement(r, ring));
  DescentElement one = DescentElement::one(r, ring);
  DescentElement taken(r, ring);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t ci = order[step];
    if (step + 1 == order.size()) {
      fam.idempotents[ci] = one - taken;
      break;
    }
    std::vector<std::uint8_t> indicator(parts.size(), 0);
    for (const auto& mem : fam.classes[ci].members)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (parts[j] == mem) indicator[j] = 1;
    auto x = solver.solve(indicator);
    if (!x) throw std::logic_error("class indicator is not in the image of c");
    DescentElement a(r, ring);
    for (std::uint32_t m = 0; m < ncomp; ++m) a.set(m, (*x)[m]);
    DescentElement u = one - taken;
    DescentElement e = u * a * u;
    const auto three = ring.from_int(3), two = ring.from_int(2);
    for (int iter = 0; iter < 64; ++iter) {
      DescentElement e2 = e * e;
      if (e2 == e) break;
      e = e2.scaled(three) - (e2 * e).scaled(two);
    }
    if (!(e * e == e)) throw std::logic_error("idempotent lifting did not converge");
    fam.idempotents[ci] = e;
    taken = taken + e;
  }
  return fam;
}

IdempotentCheck check_idempotents(const IdempotentFamily& fam) {
  IdempotentCheck chk;
  const FpRing ring{std::uint32_t(fam.p)};
  const auto parts = partitions(fam.r);
  chk.idempotent = chk.orthogonal = chk.indicators = true;
  DescentElement total(fam.r, ring);
  for (std::size_t i = 0; i < fam.idempotents.size(); ++i) {
    const auto& e = fam.idempotents[i];
    total = total + e;
    if (!(e * e == e)) chk.idempotent = false;
    for (std::size_t j = 0; j < fam.idempotents.size(); ++j)
      if (i != j && !(e * fam.idempotents[j]).is_zero()) chk.orthogonal = false;
    auto values = c_map(e);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      bool member = std::find(fam.classes[i].members.begin(), fam.classes[i].members.end(), parts[k]) !=
                    fam.classes[i].members.end();
      if (values[k] != (member ? 1u : 0u)) chk.indicators = false;
    }
  }
  chk.complete = total == DescentElement::one(fam.r, ring);
  return chk;
}

// ---------------------------------------------------------------- actions

namespace {
std::size_t permuted_index(std::size_t index, const Permutation& sigma, int n, std::vector<int>& digits) {
  const int r = int(sigma.size());
  for (int i = r - 1; i >= 0; --i) {
    digits[std::size_t(i)] = int(index % std::size_t(n));
    index /= std::size_t(n);
  }
  std::size_t out = 0;
  for (int i = 0; i < r; ++i) out = out * std::size_t(n) + std::size_t(digits[std::size_t(sigma[std::size_t(i)])]);
  return out;
}
}  // namespace

Tensor act_on_tensor(const Permutation& sigma, const Tensor& t) {
  if (int(sigma.size()) != t.degree()) throw PreconditionError("permutation degree does not match tensor degree");
  Tensor out(t.n(), t.degree(), t.field());
  std::vector<int> digits(sigma.size());
  for (std::size_t i = 0; i < t.coeffs().size(); ++i)
    if (t.coeffs()[i]) out.coeffs()[permuted_index(i, sigma, t.n(), digits)] = t.coeffs()[i];
  return out;
}

Tensor act_on_tensor(const DescentElement& e, const Tensor& t) {
  if (e.degree() != t.degree()) throw PreconditionError("descent element degree does not match tensor degree");
  if (e.ring().p != t.field().p()) throw PreconditionError("descent element and tensor over different fields");
  const PrimeField& f = t.field();
  auto coeffs = e.permutation_coefficients();
  Tensor out(t.n(), t.degree(), f);
  std::vector<int> digits(static_cast<std::size_t>(t.degree()));
  for (std::uint64_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k]) continue;
    Permutation sigma = permutation_unrank(k, t.degree());
    for (std::size_t i = 0; i < t.coeffs().size(); ++i) {
      if (!t.coeffs()[i]) continue;
      std::size_t j = permuted_index(i, sigma, t.n(), digits);
      out.coeffs()[j] = f.add(out.coeffs()[j], f.mul(std::uint8_t(coeffs[k]), t.coeffs()[i]));
    }
  }
  return out;
}

SparseMatrix action_matrix(const DescentElement& e, int n) {
  const int r = e.degree();
  const PrimeField f(e.ring().p);
  const std::size_t dim = power(n, r);
  auto coeffs = e.permutation_coefficients();
  std::vector<Permutation> perms;
  std::vector<std::uint8_t> vals;
  for (std::uint64_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k]) {
      perms.push_back(permutation_unrank(k, r));
      vals.push_back(std::uint8_t(coeffs[k]));
    }
  SparseMatrix s(dim, dim, f);
  std::vector<int> digits(static_cast<std::size_t>(r));
  std::map<std::uint32_t, std::uint8_t> row;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    row.clear();
    for (std::size_t k = 0; k < perms.size(); ++k) {
      auto j = std::uint32_t(permuted_index(i, perms[k], n, digits));
      row[j] = f.add(row[j], vals[k]);
    }
    entries.assign(row.begin(), row.end());
    s.push_row(entries);
  }
  return s;
}

namespace {
// All index orders I_1 I_2 ... (each block increasing) with block sums `targets`.
void q_orders(const std::vector<int>& targets, const std::vector<int>& mu, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t l = mu.size();
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t j, std::uint32_t used) {
    if (j == targets.size()) {
      if (used == (1u << l) - 1) out.push_back(cur);
      return;
    }
    std::uint32_t rest = ((1u << l) - 1) & ~used;
    for (std::uint32_t s = rest; s; s = (s - 1) & rest) {
      int sum = 0;
      for (std::size_t i = 0; i < l; ++i)
        if (s & (1u << i)) sum += mu[i];
      if (sum != targets[j]) continue;
      std::size_t mark = cur.size();
      for (std::size_t i = 0; i < l; ++i)
        if (s & (1u << i)) cur.push_back(i);
      rec(j + 1, used | s);
      cur.resize(mark);
    }
  };
  rec(0, 0);
}
}  // namespace

Tensor act_on_lie_product(const DescentElement& e, int scale, const std::vector<Tensor>& factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  if (factors.size() > 20) throw PreconditionError("too many factors");
  const PrimeField& f = factors.front().field();
  std::vector<int> mu;
  int total = 0;
  for (const auto& t : factors) {
    mu.push_back(t.degree());
    total += t.degree();
  }
  if (total != scale * e.degree()) throw PreconditionError("factor degrees do not add up to the scaled degree");
  Tensor out(factors.front().n(), total, f);
  std::map<std::vector<std::size_t>, Tensor> cache;
  for (std::uint32_t m = 0; m < e.size(); ++m) {
    if (!e.coeff(m)) continue;
    Composition nu = composition_from_mask(e.degree(), m);
    std::vector<int> targets;
    for (int part : nu.parts) targets.push_back(part * scale);
    std::vector<std::vector<std::size_t>> orders;
    q_orders(targets, mu, orders);
    for (const auto& ord : orders) {
      auto it = cache.find(ord);
      if (it == cache.end()) {
        std::vector<const Tensor*> fs;
        for (auto i : ord) fs.push_back(&factors[i]);
        it = cache.emplace(ord, product(fs)).first;
      }
      out.add_scaled(it->second, std::uint8_t(e.coeff(m)));
    }
  }
  return out;
}

bool gr_action_check(const Composition& nu, const std::vector<Tensor>& lie_factors) {
  if (lie_factors.empty()) throw PreconditionError("empty product");
  const PrimeField f = lie_factors.front().field();
  for (const auto& b : lie_factors)
    if (!lie_power(b.n(), b.degree(), f).contains(b)) throw PreconditionError("factor is not a Lie element");
  DescentElement x = DescentElement::basis(nu, FpRing{f.p()});
  std::vector<const Tensor*> fs;
  for (const auto& b : lie_factors) fs.push_back(&b);
  return act_on_tensor(x, product(fs)) == act_on_lie_product(x, 1, lie_factors);
}

std::vector<std::string> serialize_lines(const DescentElement& e) {
  std::vector<std::string> out;
  for (std::uint32_t m = 0; m < e.size(); ++m)
    if (e.coeff(m)) out.push_back(std::to_string(e.coeff(m)) + " " + to_string(composition_from_mask(e.degree(), m)));
  return out;
}

std::string serialize(const DescentElement& e) {
  std::string s;
  for (const auto& line : serialize_lines(e)) s += line + "\n";
  return s;
}

DescentElement parse_descent_element(const std::string& text, int r, int p) {
  if (!is_prime(std::uint64_t(p))) throw PreconditionError("p must be prime");
  FpRing ring{std::uint32_t(p)};
  DescentElement e(r, ring);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long c;
    std::string comp;
    if (!(ls >> c >> comp)) throw PreconditionError("bad descent term: '" + line + "'");
    Composition nu = parse_composition(comp);
    if (nu.size() != r) throw PreconditionError("composition " + comp + " does not have size " + std::to_string(r));
    auto m = composition_mask(nu);
    e.set(m, ring.add(e.coeff(m), ring.from_int(c)));
  }
  return e;
}

}  // namespace liepowers
