// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "selftest.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "liepowers/decompose.hpp"
#include "oracles.hpp"

namespace liepowers::selftest {

namespace {

// Accumulates failures; the first few are kept for the report.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ - failures_ << "/" << checks_ << " checks";
    if (!notes_.empty()) os << ": " << notes_;
    return os.str();
  }
  void note(const std::string& s) { extra_ += (extra_.empty() ? "" : ", ") + s; }
  std::string detail() const { return extra_.empty() ? summary() : summary() + " (" + extra_ + ")"; }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string notes_, extra_;
};

std::string cfg(int p, int n, int r) {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
}

Tensor random_lie_element(int n, int d, const PrimeField& f, std::mt19937& rng) {
  Tensor t(n, d, f);
  for (const auto& b : lyndon_basis(n, d, f)) t.add_scaled(b, std::uint8_t(rng() % f.p()));
  return t;
}

bool all_passed(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (!c.passed) return false;
  return !certs.empty();
}

std::string b_dims(const DecompositionResult& r) {
  std::string s;
  for (const auto& d : r.degrees) s += (s.empty() ? "" : ",") + std::to_string(d.b.dim());
  return "[" + s + "]";
}

// ---------------------------------------------------------------- the ten checks

void witt_and_pbw(Tally& t) {
  for (int n : {2, 3})
    for (int r = 1; r <= 8; ++r)
      for (int p : {2, 3}) {
        const PrimeField f(static_cast<std::uint32_t>(p));
        t.expect(witt_dim(n, r) == oracle::count_lyndon_words(n, r), "Witt count " + cfg(p, n, r));
        t.expect(lie_power(n, r, f).dim() == witt_dim(n, r), "dim L^r " + cfg(p, n, r));
        std::uint64_t total = 0;
        for (const auto& l : partitions(r)) total += higher_lie_dim(n, l);
        t.expect(total == power(n, r), "sum of higher Lie dims " + cfg(p, n, r));
        PbwBasis pbw(n, r, f);
        for (const auto& level : filtration(pbw))
          t.expect(level.factor_dim == higher_lie_dim(n, level.lambda),
                   "PBW factor " + to_string(level.lambda) + " " + cfg(p, n, r));
      }
}

void descent_oracle(Tally& t) {
  const RationalRing q;
  for (int r = 1; r <= 5; ++r) {
    const std::uint32_t size = 1u << (r - 1);
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b) {
        auto x = RationalDescentElement::basis(r, a, q), y = RationalDescentElement::basis(r, b, q);
        auto lhs = GroupAlgebraElement<RationalRing>::from_descent(x * y);
        auto rhs = GroupAlgebraElement<RationalRing>::from_descent(x) * GroupAlgebraElement<RationalRing>::from_descent(y);
        t.expect(lhs == rhs, "X^" + to_string(composition_from_mask(r, a)) + " X^" +
                                 to_string(composition_from_mask(r, b)));
      }
  }
  std::mt19937 rng(20261019);
  auto random_element = [&](int r, FpRing ring) {
    DescentElement e(r, ring);
    for (std::uint32_t m = 0; m < e.size(); ++m) e.set(m, ring.from_int(long(rng() % ring.p)));
    return e;
  };
  const FpRing f5{5};
  for (int i = 0; i < 100; ++i) {
    auto a = random_element(6, f5), b = random_element(6, f5), c = random_element(6, f5);
    t.expect((a * b) * c == a * (b * c), "associativity, triple " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int r = 1 + i % 5;
    auto a = random_element(r, f5), b = random_element(r, f5);
    auto ca = c_map(a), cb = c_map(b), cab = c_map(a * b);
    bool ok = true;
    for (std::size_t j = 0; j < ca.size(); ++j) ok = ok && cab[j] == f5.mul(ca[j], cb[j]);
    t.expect(ok, "c multiplicative, pair " + std::to_string(i));
  }
}

void young_characters(Tally& t) {
  for (int r = 1; r <= 6; ++r) {
    for (const auto& nu : compositions(r))
      for (const auto& lambda : partitions(r))
        t.expect(young_character(nu, lambda) == oracle::young_character_by_fixed_points(nu, lambda),
                 "phi^" + to_string(nu) + "(" + to_string(lambda) + ")");
    for (int p : {2, 3, 5})
      for (const auto& cls : p_equiv_classes(r, p))
        for (const auto& nu : compositions(r)) {
          const auto v = young_character(nu, cls.members.front()) % std::uint64_t(p);
          for (const auto& m : cls.members)
            t.expect(young_character(nu, m) % std::uint64_t(p) == v,
                     "phi^" + to_string(nu) + " mod " + std::to_string(p) + " on class of " + to_string(m));
        }
  }
}

void gr_action(Tally& t) {
  std::mt19937 rng(7);
  for (int p : {2, 3}) {
    const PrimeField f(static_cast<std::uint32_t>(p));
    for (int r = 1; r <= 6; ++r) {
      const auto comps = compositions(r);
      for (int sample = 0; sample < 50; ++sample) {
        const Composition& mu = comps[rng() % comps.size()];
        std::vector<Tensor> factors;
        for (int d : mu.parts) factors.push_back(random_lie_element(2, d, f, rng));
        for (const auto& nu : comps)
          t.expect(gr_action_check(nu, factors),
                   "X^" + to_string(nu) + " on factors of degrees " + to_string(mu) + " over F_" + std::to_string(p));
      }
    }
  }
}

void idempotents(Tally& t) {
  for (int p : {2, 3})
    for (int r = 1; r <= 7; ++r) {
      auto check = check_idempotents(lift_idempotents(r, p));
      const std::string at = " r=" + std::to_string(r) + " p=" + std::to_string(p);
      t.expect(check.idempotent, "idempotency" + at);
      t.expect(check.orthogonal, "orthogonality" + at);
      t.expect(check.complete, "sum to 1" + at);
      t.expect(check.indicators, "indicator images" + at);
    }
}

void filtration_splitting(Tally& t) {
  for (int p : {2, 3})
    for (int n : {2, 3})
      for (int r = 2; r <= 6; ++r) {
        try {
          auto rep = split_tensor_power(n, r, p);
          for (const auto& c : rep.classes) t.expect(c.pbw_images_basis, "PBW image basis " + cfg(p, n, r));
        } catch (const VerificationError& e) {
          t.expect(false, cfg(p, n, r) + ": " + e.what());
        }
      }
  auto rep = split_tensor_power(2, 4, 2);
  std::vector<std::size_t> dims;
  for (const auto& c : rep.classes) dims.push_back(c.summand.dim());
  std::sort(dims.rbegin(), dims.rend());
  t.expect(dims == std::vector<std::size_t>{12, 4}, "summand dims for p=2 n=2 r=4");
  t.note("p=2 n=2 r=4 summands 12 + 4");
}

void flagship(Tally& t) {
  auto r = construct_B_family(2, 2, 3, 12);
  std::vector<std::size_t> dims;
  for (const auto& d : r.degrees) dims.push_back(d.b.dim());
  t.expect(dims == std::vector<std::size_t>{2, 8, 54, 304}, "B dims " + b_dims(r));
  auto sums = [&](int q, std::vector<std::size_t> want) {
    const DegreeResult* d = r.at_degree(q);
    if (!d) return false;
    std::vector<std::size_t> got;
    for (const auto& [c, piece] : d->pieces) got.push_back(piece.dim());
    got.push_back(d->b.dim());
    std::size_t total = 0;
    for (auto g : got) total += g;
    return got == want && total == d->lie.dim();
  };
  t.expect(sums(6, {1, 8}), "9 = 1 + 8");
  t.expect(sums(9, {2, 54}), "56 = 2 + 54");
  t.expect(sums(12, {3, 28, 304}), "335 = 3 + 28 + 304");
  t.expect(all_passed(r.certificates), "construction certificates");
  t.expect(all_passed(certify_decomposition(r)), "independent re-certification");
  t.note("B dims " + b_dims(r));
}

void second_configuration(Tally& t) {
  const PrimeField f(3);
  auto r = construct_B_family(2, 3, 2, 6);
  const DegreeResult* d2 = r.at_degree(2);
  const DegreeResult* d6 = r.at_degree(6);
  t.expect(d2 && d2->b == lie_power(2, 2, f) && d2->b.dim() == 1, "B_2 = L^2(V)");
  t.expect(d6 && d6->b == lie_power(2, 6, f) && d6->b.dim() == 9, "B_6 = L^6(V)");
  t.expect(all_passed(r.certificates), "construction certificates");
  t.expect(all_passed(certify_decomposition(r)), "L^6(V) summand certificate");
  t.note("B dims " + b_dims(r));
}

// Degree-d dimensions of the free Lie algebra on graded generators (counts g[j] in degree j).
std::vector<std::int64_t> graded_free_lie_dims(const std::vector<std::int64_t>& g, int max_degree) {
  // a_d = d [t^d] -log(1 - G(t)) through the recurrence for h = 1/(1 - G).
  std::vector<std::int64_t> h(std::size_t(max_degree + 1), 0), a(std::size_t(max_degree + 1), 0);
  h[0] = 1;
  for (int d = 1; d <= max_degree; ++d)
    for (int j = 1; j <= d; ++j) h[std::size_t(d)] += g[std::size_t(j)] * h[std::size_t(d - j)];
  // d h_d = sum_{j=1..d} a_j h_(d-j)
  for (int d = 1; d <= max_degree; ++d) {
    std::int64_t s = std::int64_t(d) * h[std::size_t(d)];
    for (int j = 1; j < d; ++j) s -= a[std::size_t(j)] * h[std::size_t(d - j)];
    a[std::size_t(d)] = s;
  }
  std::vector<std::int64_t> out(std::size_t(max_degree + 1), 0);
  for (int d = 1; d <= max_degree; ++d) {
    std::int64_t s = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) s += mobius(d / e) * a[std::size_t(e)];
    out[std::size_t(d)] = s / d;
  }
  return out;
}

void lazard(Tally& t) {
  const int top = 6;
  for (int p : {2, 3}) {
    const PrimeField f(static_cast<std::uint32_t>(p));
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        const int n = b + c;
        std::vector<Tensor> bs, cs;
        for (int i = 1; i <= b; ++i) bs.push_back(Tensor::word(n, {i}, f));
        for (int i = b + 1; i <= n; ++i) cs.push_back(Tensor::word(n, {i}, f));
        TensorSubspace bsp = TensorSubspace::span(n, 1, bs, f), csp = TensorSubspace::span(n, 1, cs, f);
        auto pieces = lazard_pieces({csp}, bsp, top);
        std::vector<std::int64_t> g(top + 1, 0);
        std::vector<TensorSubspace> gens;
        for (const auto& piece : pieces) {
          const std::size_t want = std::size_t(c) * power(b, piece.copies);
          t.expect(piece.space.dim() == want, "piece [C, B^" + std::to_string(piece.copies) + "] dim");
          g[std::size_t(piece.space.degree)] += std::int64_t(piece.space.dim());
          gens.push_back(piece.space);
        }
        auto l_b = subalgebra_generated({bsp}, top);
        auto l_wr = subalgebra_generated(gens, top);
        auto expected = graded_free_lie_dims(g, top);
        const std::string at = " dim B=" + std::to_string(b) + " dim C=" + std::to_string(c) + " p=" + std::to_string(p);
        for (int d = 1; d <= top; ++d) {
          const auto& x = l_b[std::size_t(d - 1)];
          const auto& y = l_wr[std::size_t(d - 1)];
          t.expect(x.dim() == witt_dim(b, d), "dim L^" + std::to_string(d) + "(B)" + at);
          t.expect(std::int64_t(y.dim()) == expected[std::size_t(d)], "free on C wr B, degree " + std::to_string(d) + at);
          t.expect(x.dim() + y.dim() == witt_dim(n, d), "dimension identity, degree " + std::to_string(d) + at);
          t.expect(is_direct_sum({x.space, y.space}, lie_power(n, d, f).space), "direct sum, degree " + std::to_string(d) + at);
        }
      }
  }
}

void truncation(Tally& t) {
  for (int p : {2, 3}) {
    const PrimeField f(static_cast<std::uint32_t>(p));
    for (int r = 1; r <= 4; ++r) {
      auto l = lie_power(r, r, f);
      t.expect(truncate(symmetrize_extend(l, r + 1), r) == l, "L^r " + cfg(p, r, r));
      for (const auto& c : split_tensor_power(r, r, p).classes)
        t.expect(truncate(symmetrize_extend(c.summand, r + 1), r) == c.summand, "e_J T^r " + cfg(p, r, r));
    }
  }
  auto big = construct_B_family(3, 2, 3, 6);
  auto small = construct_B_family(2, 2, 3, 6);
  auto certs = check_truncation(big, small);
  t.expect(certs.size() == 2, "degrees 3 and 6 present");
  for (const auto& c : certs) t.expect(c.passed, "truncate(B^(3), 2) = B^(2) at degree " + c.degree_or_class);
}

struct Criterion {
  const char* title;
  std::function<void(Tally&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"Witt and PBW dimension bookkeeping", witt_and_pbw},
      {"descent algebra against the group algebra", descent_oracle},
      {"Young characters and their constancy on p-classes", young_characters},
      {"action of the descent algebra on products of Lie elements", gr_action},
      {"lifted idempotent families", idempotents},
      {"idempotent splitting of the PBW filtration", filtration_splitting},
      {"B family for p=2, k=3, n=2 up to degree 12", flagship},
      {"B family for p=3, k=2, n=2 up to degree 6", second_configuration},
      {"Lazard elimination dimensions", lazard},
      {"truncation and symmetric extension", truncation},
  };
  return list;
}

template <class F>
CheckResult timed(int id, std::string title, F&& body) {
  CheckResult out;
  out.id = id;
  out.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
    out.passed = t.passed();
    out.detail = t.detail();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = t.summary() + "; aborted: " + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------- quick corpus

void quick_corpus(Tally& t) {
  std::size_t rows = 0;
  std::uint64_t total = 0;
  for (const auto& l : partitions(4)) {
    ++rows;
    total += higher_lie_dim(2, l);
  }
  t.expect(rows == 5 && total == 16, "dims p=2 n=2 r=4");
  t.expect(higher_lie_dim(2, make_partition({1})) == 2, "dims p=2 n=2 r=1");
  t.expect(p_equiv_classes(4, 2).size() == 2, "two 2-classes in degree 4");
  t.expect(witt_dim(2, 4) == 3 && witt_dim(3, 2) == 3, "Witt dimensions");

  auto r2 = split_tensor_power(2, 2, 2);
  t.expect(r2.classes.size() == 1 && r2.classes[0].chain_dims == std::vector<std::size_t>{4, 1, 0},
           "chain 4, 1, 0 for p=2 n=2 r=2");
  auto r4 = split_tensor_power(2, 4, 2);
  std::vector<std::size_t> d4;
  for (const auto& c : r4.classes) d4.push_back(c.summand.dim());
  std::sort(d4.rbegin(), d4.rend());
  t.expect(d4 == std::vector<std::size_t>{12, 4}, "summands 12 + 4 for p=2 n=2 r=4");
  auto r3 = split_tensor_power(2, 2, 3);
  std::vector<std::size_t> d3;
  for (const auto& c : r3.classes) d3.push_back(c.summand.dim());
  std::sort(d3.rbegin(), d3.rend());
  t.expect(d3 == std::vector<std::size_t>{3, 1}, "summands 3 + 1 for p=3 n=2 r=2");

  for (int p : {2, 3})
    for (int r = 1; r <= 4; ++r) t.expect(check_idempotents(lift_idempotents(r, p)).ok(), "idempotents r <= 4");
  const FpRing f3{3};
  auto e2 = lift_idempotents(2, 3).of_class(make_partition({1, 1}));
  t.expect(e2 == DescentElement::basis(make_composition({1, 1}), f3).scaled(2), "e for (1,1) over F_3 is 2 X^(1,1)");

  const PrimeField f(2);
  Tensor b1 = Tensor::word(2, {1}, f), b2 = bracket(Tensor::word(2, {1}, f), Tensor::word(2, {2}, f));
  t.expect(gr_action_check(make_composition({1, 2}), {b1, b2}), "X^(1,2) on a product of Lie elements");

  auto fam = construct_B_family(2, 2, 3, 6);
  t.expect(b_dims(fam) == "[2,8]", "B_3, B_6 dims for p=2 k=3 n=2");
  t.expect(all_passed(certify_decomposition(fam)), "B_3, B_6 certificates");
}

}  // namespace

CheckResult run_criterion(int id) {
  const auto& list = criteria();
  if (id < 1 || id > int(list.size())) throw std::out_of_range("no such criterion");
  const Criterion& c = list[std::size_t(id - 1)];
  return timed(id, c.title, c.body);
}

std::vector<CheckResult> run_quick() { return {timed(0, "worked examples up to degree 4", quick_corpus)}; }

std::vector<CheckResult> run(Level level, int threads) {
  if (level == Level::Quick) return run_quick();
  std::vector<CheckResult> out(kCriteria);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < kCriteria; i = next++) out[std::size_t(i)] = run_criterion(i + 1);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < std::max(threads, 1); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

int threads_from_env() {
  const char* v = std::getenv("LIEPOWERS_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

}  // namespace liepowers::selftest
