// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/freelie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "homogeneous.hpp"

namespace liepowers {

std::size_t power(int n, int r) {
  std::size_t out = 1;
  for (int i = 0; i < r; ++i) out *= std::size_t(n);
  return out;
}

std::size_t word_index(const Word& w, int n) {
  std::size_t idx = 0;
  for (int letter : w) {
    if (letter < 1 || letter > n) throw PreconditionError("letter outside 1..n");
    idx = idx * std::size_t(n) + std::size_t(letter - 1);
  }
  return idx;
}

Word index_word(std::size_t index, int n, int r) {
  Word w(std::size_t(r), 1);
  for (int i = r - 1; i >= 0; --i) {
    w[std::size_t(i)] = int(index % std::size_t(n)) + 1;
    index /= std::size_t(n);
  }
  return w;
}

std::string word_string(const Word& w) {
  std::string s;
  for (int letter : w) {
    if (letter < 1 || letter > 9) throw PreconditionError("text format supports letters 1..9 only");
    s.push_back(char('0' + letter));
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw PreconditionError("bad letter in word '" + s + "'");
    w.push_back(ch - '0');
  }
  return w;
}

std::vector<int> word_content(const Word& w, int n) {
  std::vector<int> c(std::size_t(n), 0);
  for (int letter : w) ++c[std::size_t(letter - 1)];
  return c;
}

// ---------------------------------------------------------------- Tensor

Tensor::Tensor(int n, int r, PrimeField field)
    : n_(n), r_(r), field_(std::move(field)), coeffs_(power(n, r), 0) {
  if (n < 1 || r < 0) throw PreconditionError("tensor needs n >= 1 and r >= 0");
}

Tensor Tensor::word(int n, const Word& w, PrimeField field, std::uint8_t coeff) {
  Tensor t(n, int(w.size()), field);
  t.coeffs_[word_index(w, n)] = std::uint8_t(coeff % field.p());
  return t;
}

Tensor Tensor::from_vector(int n, int r, std::vector<std::uint8_t> coeffs, PrimeField field) {
  Tensor t(n, r, field);
  if (coeffs.size() != t.coeffs_.size()) throw PreconditionError("coefficient vector has the wrong length");
  t.coeffs_ = std::move(coeffs);
  return t;
}

bool Tensor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint8_t v) { return v == 0; });
}

std::size_t Tensor::support_size() const {
  return std::size_t(std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint8_t v) { return v != 0; }));
}

std::vector<std::pair<Word, std::uint8_t>> Tensor::terms() const {
  std::vector<std::pair<Word, std::uint8_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) out.emplace_back(index_word(i, n_, r_), coeffs_[i]);
  return out;
}

static void same_space(const Tensor& a, const Tensor& b) {
  if (a.n() != b.n() || a.degree() != b.degree() || a.field() != b.field())
    throw PreconditionError("tensors live in different spaces");
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor t = *this;
  return t.add_scaled(o, 1);
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor t = *this;
  return t.add_scaled(o, field_.neg(1));
}

Tensor& Tensor::add_scaled(const Tensor& o, std::uint8_t c) {
  same_space(*this, o);
  detail::axpy(coeffs_.data(), o.coeffs_.data(), c, coeffs_.size(), field_);
  return *this;
}

Tensor Tensor::scaled(std::uint8_t c) const {
  Tensor t(n_, r_, field_);
  t.add_scaled(*this, c);
  return t;
}

std::string Tensor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms()) {
    os << (first ? "" : " ") << int(c) << ' ' << word_string(w);
    first = false;
  }
  return os.str();
}

Tensor product(const Tensor& a, const Tensor& b) {
  if (a.n() != b.n() || a.field() != b.field()) throw PreconditionError("product of tensors over different spaces");
  const PrimeField& f = a.field();
  Tensor out(a.n(), a.degree() + b.degree(), f);
  const std::size_t nb = b.coeffs().size();
  std::vector<std::size_t> bnz;
  for (std::size_t j = 0; j < nb; ++j)
    if (b.coeffs()[j]) bnz.push_back(j);
  auto& oc = out.coeffs();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    std::uint8_t ai = a.coeffs()[i];
    if (!ai) continue;
    std::uint8_t* dst = oc.data() + i * nb;
    if (bnz.size() * 4 > nb)
      detail::axpy(dst, b.coeffs().data(), ai, nb, f);
    else
      for (std::size_t j : bnz) dst[j] = f.add(dst[j], f.mul(ai, b.coeffs()[j]));
  }
  return out;
}

Tensor product(const std::vector<const Tensor*>& factors) {
  if (factors.empty()) throw PreconditionError("empty product needs a space");
  Tensor acc = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, *factors[i]);
  return acc;
}

Tensor bracket(const Tensor& a, const Tensor& b) {
  Tensor ab = product(a, b);
  return ab.add_scaled(product(b, a), a.field().neg(1));
}

Tensor left_normed_bracket(const std::vector<Tensor>& factors) {
  if (factors.empty()) throw PreconditionError("empty bracket");
  Tensor acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = bracket(acc, factors[i]);
  return acc;
}

// ---------------------------------------------------------------- TensorSubspace

TensorSubspace::TensorSubspace(int n_, int degree_, Subspace s) : n(n_), degree(degree_), space(std::move(s)) {
  if (space.ambient_dim() != power(n, degree)) throw PreconditionError("subspace does not live in T^r(V)");
}

TensorSubspace TensorSubspace::zero(int n, int degree, PrimeField field) {
  return TensorSubspace(n, degree, Subspace(power(n, degree), field));
}

TensorSubspace TensorSubspace::full(int n, int degree, PrimeField field) {
  return TensorSubspace(n, degree, Subspace::full(power(n, degree), field));
}

TensorSubspace TensorSubspace::span(int n, int degree, const std::vector<Tensor>& elements, PrimeField field) {
  HomogeneousSpan hs(n, degree, field);
  bool homogeneous = true;
  for (const auto& t : elements)
    if (!hs.try_insert(t)) {
      homogeneous = false;
      break;
    }
  if (homogeneous) return hs.subspace();
  Matrix m(0, power(n, degree), field);
  for (const auto& t : elements) {
    if (t.n() != n || t.degree() != degree) throw PreconditionError("spanning tensor from another space");
    m.append_row(t.coeffs());
  }
  return TensorSubspace(n, degree, Subspace::span(m));
}

Tensor TensorSubspace::basis_element(std::size_t i) const {
  return Tensor::from_vector(n, degree, space.basis().row_vector(i), space.field());
}

std::vector<Tensor> TensorSubspace::basis_elements() const {
  std::vector<Tensor> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_element(i));
  return out;
}

bool TensorSubspace::contains(const Tensor& t) const {
  if (t.n() != n || t.degree() != degree) return false;
  return space.contains(t.coeffs());
}

static void same_tensor_space(const TensorSubspace& a, const TensorSubspace& b) {
  if (a.n != b.n || a.degree != b.degree) throw PreconditionError("subspaces of different tensor powers");
}

TensorSubspace sum(const TensorSubspace& a, const TensorSubspace& b) {
  same_tensor_space(a, b);
  return TensorSubspace(a.n, a.degree, sum(a.space, b.space));
}

TensorSubspace intersect(const TensorSubspace& a, const TensorSubspace& b) {
  same_tensor_space(a, b);
  return TensorSubspace(a.n, a.degree, intersect(a.space, b.space));
}

TensorSubspace bracket_span(const TensorSubspace& a, const TensorSubspace& b) {
  if (a.n != b.n) throw PreconditionError("bracket of subspaces over different alphabets");
  std::vector<Tensor> gens;
  auto ab = a.basis_elements();
  auto bb = b.basis_elements();
  for (const auto& x : ab)
    for (const auto& y : bb) gens.push_back(bracket(x, y));
  return TensorSubspace::span(a.n, a.degree + b.degree, gens, a.field());
}

TensorSubspace product_span(const TensorSubspace& a, const TensorSubspace& b) {
  if (a.n != b.n) throw PreconditionError("product of subspaces over different alphabets");
  std::vector<Tensor> gens;
  auto ab = a.basis_elements();
  auto bb = b.basis_elements();
  for (const auto& x : ab)
    for (const auto& y : bb) gens.push_back(product(x, y));
  return TensorSubspace::span(a.n, a.degree + b.degree, gens, a.field());
}

// ---------------------------------------------------------------- Lyndon words

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + std::ptrdiff_t(s), w.end())) return false;
  return true;
}

std::vector<Word> lyndon_words(int n, int r) {
  if (n < 1 || r < 1) throw PreconditionError("lyndon_words needs n >= 1 and r >= 1");
  // Duval's generation of all Lyndon words up to length r, in lexicographic order.
  std::vector<Word> out;
  Word w{1};
  while (!w.empty()) {
    if (int(w.size()) == r) out.push_back(w);
    std::size_t m = w.size();
    while (int(w.size()) < r) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (!is_lyndon(w) || w.size() < 2) throw PreconditionError("standard factorization needs a Lyndon word of length >= 2");
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word v(w.begin() + std::ptrdiff_t(s), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + std::ptrdiff_t(s)), v};
  }
  throw std::logic_error("Lyndon word without a Lyndon suffix");
}

namespace {
Tensor lyndon_bracket_memo(const Word& w, int n, const PrimeField& f, std::map<Word, Tensor>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Tensor t = w.size() == 1 ? Tensor::word(n, w, f) : Tensor();
  if (w.size() > 1) {
    auto [u, v] = standard_factorization(w);
    t = bracket(lyndon_bracket_memo(u, n, f, memo), lyndon_bracket_memo(v, n, f, memo));
  }
  memo.emplace(w, t);
  return t;
}
}  // namespace

Tensor lyndon_bracket(const Word& w, int n, PrimeField field) {
  std::map<Word, Tensor> memo;
  return lyndon_bracket_memo(w, n, field, memo);
}

std::vector<Tensor> lyndon_basis(int n, int r, PrimeField field) {
  std::map<Word, Tensor> memo;
  std::vector<Tensor> out;
  for (const auto& w : lyndon_words(n, r)) out.push_back(lyndon_bracket_memo(w, n, field, memo));
  return out;
}

TensorSubspace lie_power(int n, int r, PrimeField field) {
  return TensorSubspace::span(n, r, lyndon_basis(n, r, field), field);
}

std::vector<TensorSubspace> subalgebra_generated(const std::vector<TensorSubspace>& generators, int max_degree) {
  if (generators.empty()) throw PreconditionError("no generators given");
  const int n = generators.front().n;
  const PrimeField f = generators.front().field();
  std::vector<TensorSubspace> g, a;
  for (int d = 1; d <= max_degree; ++d) g.push_back(TensorSubspace::zero(n, d, f));
  for (const auto& s : generators) {
    if (s.n != n) throw PreconditionError("generators over different alphabets");
    if (s.degree >= 1 && s.degree <= max_degree) g[std::size_t(s.degree - 1)] = sum(g[std::size_t(s.degree - 1)], s);
  }
  for (int d = 1; d <= max_degree; ++d) {
    TensorSubspace acc = g[std::size_t(d - 1)];
    for (int e = 1; e < d; ++e) {
      const auto& left = a[std::size_t(d - e - 1)];
      const auto& right = g[std::size_t(e - 1)];
      if (left.dim() && right.dim()) acc = sum(acc, bracket_span(left, right));
    }
    a.push_back(acc);
  }
  return a;
}

std::vector<LazardPiece> lazard_pieces(const std::vector<TensorSubspace>& xs, const TensorSubspace& b,
                                       int max_degree) {
  std::vector<LazardPiece> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    TensorSubspace cur = xs[i];
    int copies = 0;
    while (cur.degree <= max_degree) {
      out.push_back(LazardPiece{i, copies, cur});
      if (cur.degree + b.degree > max_degree) break;
      cur = bracket_span(cur, b);
      ++copies;
    }
  }
  return out;
}

// ---------------------------------------------------------------- alphabet changes

namespace {
// Index in T^r(V^(n_big)) of each word of T^r(V^(n_small)).
std::vector<std::size_t> embedding_indices(int n_small, int n_big, int r) {
  const std::size_t dim = power(n_small, r);
  std::vector<std::size_t> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = word_index(index_word(i, n_small, r), n_big);
  return out;
}
}  // namespace

Tensor truncate(const Tensor& t, int n_target) {
  if (n_target < 1 || n_target > t.n()) throw PreconditionError("truncation target must be between 1 and n");
  Tensor out(n_target, t.degree(), t.field());
  auto idx = embedding_indices(n_target, t.n(), t.degree());
  for (std::size_t i = 0; i < idx.size(); ++i) out.coeffs()[i] = t.coeffs()[idx[i]];
  return out;
}

TensorSubspace truncate(const TensorSubspace& s, int n_target) {
  if (n_target < 1 || n_target > s.n) throw PreconditionError("truncation target must be between 1 and n");
  auto idx = embedding_indices(n_target, s.n, s.degree);
  Matrix m(s.dim(), idx.size(), s.field());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m.set(r, i, s.space.basis().at(r, idx[i]));
  return TensorSubspace(n_target, s.degree, Subspace::span(m));
}

SparseMatrix letter_permutation(int n, int r, const std::vector<int>& perm, PrimeField field) {
  if (int(perm.size()) != n) throw PreconditionError("letter permutation has the wrong length");
  const std::size_t dim = power(n, r);
  SparseMatrix s(dim, dim, field);
  for (std::size_t i = 0; i < dim; ++i) {
    Word w = index_word(i, n, r);
    for (int& letter : w) letter = perm[std::size_t(letter - 1)];
    s.push_row({{std::uint32_t(word_index(w, n)), 1}});
  }
  return s;
}

TensorSubspace symmetrize_extend(const TensorSubspace& s, int n_target) {
  if (n_target < s.n) throw PreconditionError("symmetrize_extend target must be at least n");
  const PrimeField f = s.field();
  const std::size_t big = power(n_target, s.degree);
  auto idx = embedding_indices(s.n, n_target, s.degree);
  std::vector<SparseMatrix> gens;
  if (n_target > 1) {
    std::vector<int> swap(static_cast<std::size_t>(n_target)), cycle(static_cast<std::size_t>(n_target));
    for (int i = 0; i < n_target; ++i) {
      swap[std::size_t(i)] = i + 1;
      cycle[std::size_t(i)] = (i + 1) % n_target + 1;
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(letter_permutation(n_target, s.degree, swap, f));
    gens.push_back(letter_permutation(n_target, s.degree, cycle, f));
  }
  EchelonBuilder eb(big, f);
  std::vector<std::vector<std::uint8_t>> frontier;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::vector<std::uint8_t> v(big, 0);
    for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = s.space.basis().at(r, i);
    if (eb.insert(v)) frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        auto w = g.apply(v);
        if (eb.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return TensorSubspace(n_target, s.degree, Subspace::span(eb));
}

TensorSubspace weight_component(const TensorSubspace& s, const std::vector<int>& alpha) {
  if (int(alpha.size()) != s.n) throw PreconditionError("weight has the wrong number of entries");
  const std::size_t dim = power(s.n, s.degree);
  std::vector<bool> keep(dim);
  for (std::size_t i = 0; i < dim; ++i) keep[i] = word_content(index_word(i, s.n, s.degree), s.n) == alpha;
  Matrix m = s.space.basis();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t i = 0; i < dim; ++i)
      if (!keep[i]) m.set(r, i, 0);
  return TensorSubspace(s.n, s.degree, Subspace::span(m));
}

// ---------------------------------------------------------------- text format

std::vector<std::string> serialize_lines(const TensorSubspace& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_element(i).to_string());
  return out;
}

std::string serialize(const TensorSubspace& s) {
  std::ostringstream os;
  os << s.field().p() << ' ' << s.n << ' ' << s.degree << '\n';
  for (const auto& line : serialize_lines(s)) os << line << '\n';
  return os.str();
}

TensorSubspace parse_tensor_subspace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int p = 0, n = 0, r = 0;
  std::vector<std::vector<std::uint8_t>> rows;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> p >> n >> r)) throw PreconditionError("bad subspace header: '" + line + "'");
      if (n < 1 || n > 9 || r < 0) throw PreconditionError("subspace header out of range");
      PrimeField check{std::uint32_t(p)};
      (void)check;
      have_header = true;
      continue;
    }
    std::vector<std::uint8_t> v(power(n, r), 0);
    long long c;
    std::string w;
    while (ls >> c) {
      if (!(ls >> w)) throw PreconditionError("coefficient without a word: '" + line + "'");
      Word word = parse_word(w);
      if (int(word.size()) != r) throw PreconditionError("word '" + w + "' has the wrong length");
      for (int letter : word)
        if (letter > n) throw PreconditionError("word '" + w + "' uses a letter above n");
      std::size_t idx = word_index(word, n);
      long long m = ((c % p) + p) % p;
      v[idx] = std::uint8_t((v[idx] + m) % p);
    }
    if (!ls.eof()) throw PreconditionError("bad coefficient in line: '" + line + "'");
    rows.push_back(std::move(v));
  }
  if (!have_header) throw PreconditionError("missing subspace header");
  PrimeField f{std::uint32_t(p)};
  Matrix m(0, power(n, r), f);
  for (const auto& v : rows) m.append_row(v);
  return TensorSubspace(n, r, Subspace::span(m));
}

// ---------------------------------------------------------------- PBW basis

PbwBasis::PbwBasis(int n, int r, PrimeField field) : n_(n), r_(r), field_(field) {
  for (int d = 1; d <= r; ++d)
    for (auto& t : lyndon_basis(n, d, field)) gens_.push_back(PbwGenerator{std::move(t), 0});
  build();
}

PbwBasis::PbwBasis(int n, int r, std::vector<PbwGenerator> generators)
    : n_(n), r_(r), field_(generators.empty() ? PrimeField(2) : generators.front().element.field()) {
  for (auto& g : generators) {
    if (g.element.n() != n) throw PreconditionError("PBW generator over the wrong alphabet");
    if (g.element.degree() >= 1 && g.element.degree() <= r) gens_.push_back(std::move(g));
  }
  for (int d = 1; d <= r; ++d) {
    std::vector<Tensor> of_degree;
    for (const auto& g : gens_)
      if (g.element.degree() == d) of_degree.push_back(g.element);
    if (of_degree.size() != witt_dim(n, d) || TensorSubspace::span(n, d, of_degree, field_).dim() != of_degree.size() ||
        !(TensorSubspace::span(n, d, of_degree, field_) == lie_power(n, d, field_)))
      throw PreconditionError("PBW generators of degree " + std::to_string(d) + " are not a basis of L^d");
  }
  build();
}

void PbwBasis::build() {
  std::stable_sort(gens_.begin(), gens_.end(), [](const PbwGenerator& a, const PbwGenerator& b) {
    if (a.element.degree() != b.element.degree()) return a.element.degree() < b.element.degree();
    if (a.block != b.block) return a.block < b.block;
    return a.element.coeffs() < b.element.coeffs();
  });
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, int, const Tensor&)> rec = [&](std::size_t start, int left, const Tensor& prefix) {
    if (left == 0) {
      Element e;
      e.factors = cur;
      for (auto i : cur) e.shape.parts.push_back(gens_[i].element.degree());
      std::sort(e.shape.parts.begin(), e.shape.parts.end(), std::greater<int>());
      elements_.push_back(std::move(e));
      expanded_.push_back(prefix);
      return;
    }
    for (std::size_t j = start; j < gens_.size(); ++j) {
      if (gens_[j].element.degree() > left) break;
      cur.push_back(j);
      rec(j, left - gens_[j].element.degree(),
          prefix.degree() == 0 ? gens_[j].element : product(prefix, gens_[j].element));
      cur.pop_back();
    }
  };
  rec(0, r_, Tensor(n_, 0, field_));
}

Tensor PbwBasis::expand(const Element& e) const {
  Tensor acc(n_, 0, field_);
  acc.coeffs()[0] = 1;
  for (auto i : e.factors) acc = product(acc, gens_[i].element);
  return acc;
}

std::vector<std::size_t> PbwBasis::shape_elements(const Partition& lambda) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].shape == lambda) out.push_back(i);
  return out;
}

std::vector<FiltrationLevel> filtration(const PbwBasis& basis) {
  auto parts = partitions(basis.degree());
  std::reverse(parts.begin(), parts.end());
  HomogeneousSpan hs(basis.n(), basis.degree(), basis.field());
  std::vector<FiltrationLevel> out;
  for (const auto& lambda : parts) {
    std::size_t before = hs.rank();
    for (auto i : basis.shape_elements(lambda))
      if (!hs.try_insert(basis.expanded(i))) throw std::logic_error("PBW element is not multihomogeneous");
    out.push_back(FiltrationLevel{lambda, hs.rank(), hs.rank() - before});
  }
  return out;
}

namespace {
TensorSubspace filtration_span(const PbwBasis& basis, const Partition& lambda, bool strict) {
  HomogeneousSpan hs(basis.n(), basis.degree(), basis.field());
  for (std::size_t i = 0; i < basis.elements().size(); ++i) {
    const Partition& sh = basis.elements()[i].shape;
    bool above = lex_less(lambda, sh);
    if (above || (!strict && sh == lambda)) hs.try_insert(basis.expanded(i));
  }
  return hs.subspace();
}
}  // namespace

TensorSubspace filtration_subspace(const PbwBasis& basis, const Partition& lambda) {
  return filtration_span(basis, lambda, false);
}

TensorSubspace filtration_subspace_above(const PbwBasis& basis, const Partition& lambda) {
  return filtration_span(basis, lambda, true);
}

}  // namespace liepowers
