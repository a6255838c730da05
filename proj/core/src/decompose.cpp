// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "liepowers/decompose.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "homogeneous.hpp"
#include "multilinear.hpp"

namespace liepowers {

namespace {

std::size_t capped_power(int n, int r) {
  std::size_t v = 1;
  for (int i = 0; i < r; ++i) {
    v *= std::size_t(n);
    if (v > kDimensionCap)
      throw PreconditionError("n^r = " + std::to_string(n) + "^" + std::to_string(r) + " exceeds the dimension cap " +
                              std::to_string(kDimensionCap));
  }
  return v;
}

Tensor apply_sparse(const SparseMatrix& m, const Tensor& t) {
  return Tensor::from_vector(t.n(), t.degree(), m.apply(t.coeffs()), t.field());
}

int p_free_part(int q, int p) {
  while (q % p == 0) q /= p;
  return q;
}

Partition equal_parts(int total, int part) {
  return make_partition(std::vector<int>(std::size_t(total / part), part));
}

std::string join_dims(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " + " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- idempotent splitting

namespace {

struct ClassImages {
  std::vector<Tensor> images;  // e_J y for every PBW element y
};

ClassImages class_images(const PbwBasis& pbw, const DescentElement& e) {
  SparseMatrix m = action_matrix(e, pbw.n());
  ClassImages ci;
  ci.images.reserve(pbw.elements().size());
  for (std::size_t i = 0; i < pbw.elements().size(); ++i) ci.images.push_back(apply_sparse(m, pbw.expanded(i)));
  return ci;
}

bool pbw_images_from(const PbwBasis& pbw, const PClass& cls, const ClassImages& ci, std::size_t summand_dim) {
  HomogeneousSpan span(pbw.n(), pbw.degree(), pbw.field());
  std::size_t count = 0;
  for (std::size_t i = 0; i < pbw.elements().size(); ++i) {
    const Partition& shape = pbw.elements()[i].shape;
    if (std::find(cls.members.begin(), cls.members.end(), shape) == cls.members.end()) continue;
    ++count;
    span.try_insert(ci.images[i]);
  }
  return span.rank() == count && count == summand_dim;
}

}  // namespace

bool pbw_image_check(const PbwBasis& pbw, const IdempotentFamily& family, std::size_t class_index) {
  const auto& cls = family.classes.at(class_index);
  ClassImages ci = class_images(pbw, family.idempotents[class_index]);
  HomogeneousSpan all(pbw.n(), pbw.degree(), pbw.field());
  for (const auto& t : ci.images) all.try_insert(t);
  return pbw_images_from(pbw, cls, ci, all.rank());
}

bool pbw_image_check(int n, int r, int p, const PClass& cls) {
  capped_power(n, r);
  IdempotentFamily fam = lift_idempotents(r, p);
  PbwBasis pbw(n, r, PrimeField(static_cast<std::uint32_t>(p)));
  for (std::size_t i = 0; i < fam.classes.size(); ++i)
    if (fam.classes[i].key == cls.key) return pbw_image_check(pbw, fam, i);
  throw PreconditionError("not a p-class of Part(" + std::to_string(r) + ")");
}

FiltrationReport split_tensor_power(int n, int r, int p) {
  const std::size_t total = capped_power(n, r);
  const PrimeField f(static_cast<std::uint32_t>(p));
  IdempotentFamily fam = lift_idempotents(r, p);
  PbwBasis pbw(n, r, f);
  auto parts = partitions(r);  // increasing
  FiltrationReport rep;
  rep.p = p;
  rep.n = n;
  rep.r = r;
  std::vector<Subspace> summands;
  for (std::size_t ci = 0; ci < fam.classes.size(); ++ci) {
    const PClass& cls = fam.classes[ci];
    const std::string cname = "class {" + [&] {
      std::string s;
      for (std::size_t i = 0; i < cls.members.size(); ++i) s += (i ? " | " : "") + to_string(cls.members[i]);
      return s;
    }() + "}";
    ClassImages images = class_images(pbw, fam.idempotents[ci]);
    HomogeneousSpan span(n, r, f);
    std::map<std::string, std::size_t> dim_at;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      const Partition& lambda = *it;
      const std::size_t above = span.rank();
      for (std::size_t i = 0; i < pbw.elements().size(); ++i)
        if (pbw.elements()[i].shape == lambda) span.try_insert(images.images[i]);
      const std::size_t diff = span.rank() - above;
      const bool member = std::find(cls.members.begin(), cls.members.end(), lambda) != cls.members.end();
      const std::size_t want = member ? higher_lie_dim(n, lambda) : 0;
      if (diff != want)
        throw VerificationError(cname + ", partition " + to_string(lambda) + ": factor dimension " +
                                std::to_string(diff) + ", expected " + std::to_string(want));
      dim_at[to_string(lambda)] = span.rank();
    }
    ClassSummand cs;
    cs.cls = cls;
    cs.summand = span.subspace();
    for (const auto& lambda : cls.members) {
      cs.chain_dims.push_back(dim_at[to_string(lambda)]);
      cs.expected_factor_dims.push_back(higher_lie_dim(n, lambda));
    }
    cs.chain_dims.push_back(0);
    for (std::size_t j = 0; j + 1 < cs.chain_dims.size(); ++j)
      if (cs.chain_dims[j] - cs.chain_dims[j + 1] != cs.expected_factor_dims[j])
        throw VerificationError(cname + ", partition " + to_string(cls.members[j]) + ": chain step mismatch");
    cs.pbw_images_basis = pbw_images_from(pbw, cls, images, cs.summand.dim());
    if (!cs.pbw_images_basis) throw VerificationError(cname + ": PBW images do not form a basis of the summand");
    summands.push_back(cs.summand.space);
    rep.classes.push_back(std::move(cs));
  }
  if (!is_direct_sum(summands, Subspace::full(total, f)))
    throw VerificationError("the class summands do not form a direct sum equal to T^" + std::to_string(r));
  return rep;
}

// ---------------------------------------------------------------- helpers for the B family

Matrix dynkin_retraction(int n, int q, const TensorSubspace& lie) {
  const PrimeField& f = lie.field();
  if (q % int(f.p()) == 0) throw PreconditionError("the Dynkin map is not a projection when p divides the degree");
  const std::size_t total = power(n, q);
  const std::uint8_t inv_q = f.inv(f.from_int(q));
  std::vector<Tensor> letters;
  for (int i = 1; i <= n; ++i) letters.push_back(Tensor::word(n, {i}, f));
  Matrix out(total, lie.dim(), f);
  for (std::size_t w = 0; w < total; ++w) {
    Word word = index_word(w, n, q);
    std::vector<Tensor> fs;
    for (int l : word) fs.push_back(letters[std::size_t(l - 1)]);
    Tensor b = left_normed_bracket(fs).scaled(inv_q);
    auto c = lie.space.try_coordinates(b.coeffs().data());
    if (!c) throw std::logic_error("left-normed bracket outside the Lie power");
    std::copy(c->begin(), c->end(), out.row(w));
  }
  return out;
}

const DegreeResult* DecompositionResult::at_degree(int q) const {
  for (const auto& d : degrees)
    if (d.degree == q) return &d;
  return nullptr;
}

namespace {

TensorSubspace lie_power_of(const TensorSubspace& b, int copies) {
  const int q = b.degree * copies;
  if (b.dim() == 0) return TensorSubspace::zero(b.n, q, b.field());
  return subalgebra_generated({b}, q)[std::size_t(q - 1)];
}

// Terms (coefficient, order) of a descent element acting on c block positions.
std::map<std::vector<int>, std::uint8_t> block_terms(const DescentElement& e) {
  const int c = e.degree();
  std::map<std::vector<int>, std::uint8_t> out;
  const PrimeField f(e.ring().p);
  for (std::uint32_t m = 0; m < e.size(); ++m) {
    if (!e.coeff(m)) continue;
    Composition nu = composition_from_mask(c, m);
    std::vector<int> cur;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t j, std::uint32_t used) {
      if (j == nu.parts.size()) {
        auto& slot = out[cur];
        slot = f.add(slot, std::uint8_t(e.coeff(m)));
        return;
      }
      std::uint32_t rest = ((1u << c) - 1) & ~used;
      for (std::uint32_t s = rest; s; s = (s - 1) & rest) {
        if (__builtin_popcount(s) != nu.parts[j]) continue;
        std::size_t mark = cur.size();
        for (int i = 0; i < c; ++i)
          if (s & (1u << i)) cur.push_back(i);
        rec(j + 1, used | s);
        cur.resize(mark);
      }
    };
    rec(0, 0);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second ? std::next(it) : out.erase(it);
  return out;
}

ComplementData complement_data_impl(int q, int k, int n, int p, const TensorSubspace& lie,
                                    const std::vector<DegreeResult>& lower) {
  const PrimeField f(static_cast<std::uint32_t>(p));
  const int qp = p_free_part(q, p);
  struct Block {
    int d;
    int step;  // c_d must be a multiple of this
    std::vector<Tensor> basis;
  };
  std::vector<Block> blocks;
  ComplementData cd;
  cd.c = TensorSubspace::zero(n, q, f);
  for (const auto& r : lower) {
    const int d = r.degree;
    if (d >= q || q % d != 0 || r.b.dim() == 0) continue;
    blocks.push_back({d, qp / p_free_part(d, p), r.b.basis_elements()});
    cd.c = sum(cd.c, lie_power_of(r.b, q / d));
  }

  const bool genuine = q <= 7;
  cd.genuine_idempotent = genuine;
  SparseMatrix e_q;
  DescentElement f_s;
  if (genuine) {
    e_q = action_matrix(lift_idempotents(q, p).of_class(equal_parts(q, qp)), n);
  } else {
    const int s = q / k;
    f_s = lift_idempotents(s, p).of_class(equal_parts(s, p_free_part(s, p)));
  }
  auto phi = [&](const std::vector<const Tensor*>& factors) {
    if (genuine) return apply_sparse(e_q, product(factors));
    std::vector<Tensor> fs;
    for (auto* t : factors) fs.push_back(*t);
    return act_on_lie_product(f_s, k, fs);
  };

  std::vector<Tensor> u_gens, phi_images;
  std::size_t budget = 200000;
  // Enumerate families (c_d) with sum c_d d = q.
  std::vector<int> counts(blocks.size(), 0);
  std::function<void(std::size_t, int)> families = [&](std::size_t bi, int left) {
    if (bi == blocks.size()) {
      if (left != 0) return;
      // Per block: its idempotent terms; then all basis tuples.
      std::vector<std::map<std::vector<int>, std::uint8_t>> terms(blocks.size());
      std::size_t combos = 1;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (!counts[j]) continue;
        terms[j] = block_terms(lift_idempotents(counts[j], p).of_class(equal_parts(counts[j], blocks[j].step)));
        for (int t = 0; t < counts[j]; ++t) combos *= blocks[j].basis.size();
      }
      if (combos > budget) throw PreconditionError("modified PBW data is too large at degree " + std::to_string(q));
      budget -= combos;
      std::vector<std::size_t> choice;
      for (std::size_t j = 0; j < blocks.size(); ++j)
        for (int t = 0; t < counts[j]; ++t) choice.push_back(0);
      while (true) {
        // Expand the product of e_(c_d) acting on each block's factors.
        std::vector<std::pair<std::uint8_t, std::vector<const Tensor*>>> expanded{{1, {}}};
        std::size_t pos = 0;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          if (!counts[j]) continue;
          std::vector<std::pair<std::uint8_t, std::vector<const Tensor*>>> next;
          for (const auto& [coeff, prefix] : expanded)
            for (const auto& [order, c] : terms[j]) {
              auto fs = prefix;
              for (int o : order) fs.push_back(&blocks[j].basis[choice[pos + std::size_t(o)]]);
              next.push_back({f.mul(coeff, c), std::move(fs)});
            }
          expanded = std::move(next);
          pos += std::size_t(counts[j]);
        }
        Tensor t(n, q, f), ph(n, q, f);
        for (const auto& [coeff, fs] : expanded) {
          t.add_scaled(product(fs), coeff);
          ph.add_scaled(phi(fs), coeff);
        }
        u_gens.push_back(std::move(t));
        phi_images.push_back(std::move(ph));
        // Next basis tuple.
        std::size_t i = 0;
        bool done = true;
        for (std::size_t j = 0; j < blocks.size() && done; ++j)
          for (int c = 0; c < counts[j]; ++c, ++i) {
            if (++choice[i] < blocks[j].basis.size()) {
              done = false;
              break;
            }
            choice[i] = 0;
          }
        if (done) break;
      }
      return;
    }
    const Block& b = blocks[bi];
    for (int c = 0; c * b.d <= left; c += b.step) {
      counts[bi] = c;
      families(bi + 1, left - c * b.d);
    }
    counts[bi] = 0;
  };
  families(0, q);

  cd.u_prime = TensorSubspace::span(n, q, u_gens, f);
  cd.intersection_ok = intersect(cd.u_prime, lie) == cd.c;
  for (const auto& l : lie.basis_elements()) phi_images.push_back(phi({&l}));
  cd.phi_rank = TensorSubspace::span(n, q, phi_images, f).dim();
  cd.expected_rank = cd.u_prime.dim() + lie.dim() - cd.c.dim();
  for (const auto& cls : p_equiv_classes(q, p)) {
    if (std::find(cls.members.begin(), cls.members.end(), equal_parts(q, qp)) == cls.members.end()) continue;
    for (const auto& lambda : cls.members) cd.class_dim += higher_lie_dim(n, lambda);
  }
  return cd;
}

// U_sk: sum of the elimination pieces [W_ik, B_s(1)k, ..., B_s(r)k] with r > 0.
TensorSubspace elimination_sum(int s, const std::vector<DegreeResult>& res, int n, int q, const PrimeField& f) {
  TensorSubspace acc = TensorSubspace::zero(n, q, f);
  std::map<std::vector<int>, TensorSubspace> memo;
  std::function<TensorSubspace(const std::vector<int>&)> piece = [&](const std::vector<int>& key) -> TensorSubspace {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    TensorSubspace out;
    if (key.size() == 1) {
      out = res[std::size_t(key[0] - 1)].w;
    } else {
      std::vector<int> prefix(key.begin(), key.end() - 1);
      out = bracket_span(piece(prefix), res[std::size_t(key.back() - 1)].b);
    }
    memo.emplace(key, out);
    return out;
  };
  std::vector<int> seq;
  // seq = (i, s_1 <= s_2 <= ...); each new value j needs the degree so far to exceed j.
  std::function<void(int, int, int)> extend = [&](int degree_so_far, int min_next, int last_value) {
    if (degree_so_far == s && seq.size() > 1) {
      acc = sum(acc, piece(seq));
      return;
    }
    for (int j = min_next; degree_so_far + j <= s; ++j) {
      if (j != last_value) {
        // Degree before any copy of B_jk is added.
        int before = seq[0];
        for (std::size_t t = 1; t < seq.size(); ++t)
          if (seq[t] < j) before += seq[t];
        if (before <= j) continue;
      }
      seq.push_back(j);
      extend(degree_so_far + j, j, j);
      seq.pop_back();
    }
  };
  for (int i = 2; i < s; ++i) {
    seq = {i};
    extend(i, 1, 0);
  }
  return acc;
}

std::optional<TensorSubspace> group_complement(const TensorAction& ta, const TensorSubspace& lower,
                                               const TensorSubspace& lie, std::uint64_t seed) {
  SolveOptions so;
  so.randomize = seed != 0;
  so.seed = seed;
  ProjectionSolution sol = solve_equivariant_projection(ta.action, lower.space, lie.space, so);
  if (!sol) return std::nullopt;
  const Projection& pi = *sol.projection;
  Matrix moved = pi.retraction * lower.space.basis();
  Matrix w = lie.space.basis() - moved;
  return TensorSubspace(lie.n, lie.degree, Subspace::span(w));
}

TensorSubspace multilinear_complement(int q, int k, int n, const PrimeField& f) {
  internal::Multilinear ml(q, f);
  Subspace l = ml.lie();
  Subspace c = ml.lower(k);
  SolveOptions so;
  so.method = SolveOptions::Method::Dense;
  ProjectionSolution sol = solve_equivariant_projection(ml.letter_action(), c, l, so);
  if (!sol) throw VerificationError("no letter-permutation invariant complement at degree " + std::to_string(q));
  Matrix w = l.basis() - sol.projection->retraction * c.basis();
  return ml.substitute(Subspace::span(w), n);
}

// Coordinates of each row of `rows` with respect to the stacked bases of `parts`; returns the last part's block.
std::optional<Matrix> last_part_coordinates(const Matrix& rows, const std::vector<const Subspace*>& parts) {
  const PrimeField& f = rows.field();
  Matrix stacked(0, rows.cols(), f);
  for (auto* s : parts) stacked = stacked.stacked(s->basis());
  const std::size_t offset = stacked.rows() - parts.back()->dim();
  LinearSolver solver(stacked);
  Matrix out(rows.rows(), parts.back()->dim(), f);
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto x = solver.solve(rows.row_vector(i));
    if (!x) return std::nullopt;
    std::copy(x->begin() + std::ptrdiff_t(offset), x->end(), out.row(i));
  }
  return out;
}

struct Certified {
  Projection projection;
  std::string method;
};

std::optional<Certified> certify_summand(const TensorAction& ta, const DegreeResult& dr, const TensorSubspace& d_sum,
                                         const std::vector<std::string>& routes) {
  const PrimeField& f = ta.field;
  const int q = dr.degree, n = ta.n;
  const std::size_t total = power(n, q);
  const Subspace full = Subspace::full(total, f);
  if (dr.b.dim() == 0) return Certified{Projection{full, dr.b.space, Matrix(total, 0, f)}, "trivial"};
  for (const auto& route : routes) {
    try {
      std::optional<Projection> pi;
      if (route == "dynkin") {
        Matrix to_lie = dynkin_retraction(n, q, dr.lie);
        auto split = last_part_coordinates(dr.lie.space.basis(), {&d_sum.space, &dr.b.space});
        if (!split) continue;
        pi = Projection{full, dr.b.space, to_lie * *split};
      } else if (route == "modified_pbw") {
        const auto& cd = *dr.complement_data;
        const int qp = p_free_part(q, int(f.p()));
        SparseMatrix e = action_matrix(lift_idempotents(q, int(f.p())).of_class(equal_parts(q, qp)), n);
        // Coordinates of e(w) in the images of the U' and B bases; phi must be injective on U' + B.
        Matrix stacked = e.left_multiply(cd.u_prime.space.basis()).stacked(e.left_multiply(dr.b.space.basis()));
        LinearSolver solver(stacked);
        if (solver.left_kernel().rows() != 0) continue;
        Matrix r(total, dr.b.dim(), f);
        bool ok = true;
        Matrix dense = e.dense();
        for (std::size_t w = 0; w < total && ok; ++w) {
          auto x = solver.solve(dense.row_vector(w));
          if (!x) {
            ok = false;
            break;
          }
          std::copy(x->begin() + std::ptrdiff_t(cd.u_prime.dim()), x->end(), r.row(w));
        }
        if (!ok) continue;
        pi = Projection{full, dr.b.space, r};
      } else if (route == "solver") {
        ProjectionSolution sol = solve_equivariant_projection(ta.action, dr.b.space, full);
        if (!sol) continue;
        pi = *sol.projection;
      }
      if (pi && verify_projection(ta.action, *pi).ok()) return Certified{*pi, route};
    } catch (const std::length_error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

ComplementData canonical_complement(int q, int k, int n, int p, const std::vector<DegreeResult>& lower_degrees) {
  capped_power(n, q);
  return complement_data_impl(q, k, n, p, lie_power(n, q, PrimeField(static_cast<std::uint32_t>(p))), lower_degrees);
}

// ---------------------------------------------------------------- construction

DecompositionResult construct_B_family(int n, int p, int k, int max_degree, const DecompositionOptions& options) {
  if (!is_prime(std::uint64_t(p))) throw PreconditionError("p must be prime");
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (k < 1 || k % p == 0) throw PreconditionError("k must be positive and not divisible by p");
  if (max_degree < k) throw PreconditionError("max_degree must be at least k");
  capped_power(n, max_degree);
  const auto start = std::chrono::steady_clock::now();
  const PrimeField f(static_cast<std::uint32_t>(p));
  const auto gens = gl_generators(n, std::uint32_t(p));

  DecompositionResult out;
  out.p = p;
  out.n = n;
  out.k = k;
  out.max_degree = max_degree;
  std::vector<DegreeResult>& res = out.degrees;

  auto add_cert = [&](std::string kind, int q, bool passed, int stage, std::string ref, std::string detail) {
    out.certificates.push_back({std::move(kind), std::to_string(q), passed, stage, std::move(ref), std::move(detail)});
  };

  for (int s = 1; s * k <= max_degree; ++s) {
    const int q = s * k;
    const std::string ref = "results[" + std::to_string(s - 1) + "]";
    TensorAction ta = induce_on_tensor_power(gens, q);
    DegreeResult dr;
    dr.degree = q;
    dr.s = s;
    dr.lie = lie_power(n, q, f);
    dr.lower = TensorSubspace::zero(n, q, f);
    dr.u = TensorSubspace::zero(n, q, f);
    if (s > 1) {
      for (int i = 1; 2 * i <= s; ++i)
        dr.lower = sum(dr.lower, bracket_span(res[std::size_t(i - 1)].lie, res[std::size_t(s - i - 1)].lie));
      dr.u = elimination_sum(s, res, n, q, f);
    }
    TensorSubspace d_sum = TensorSubspace::zero(n, q, f);
    std::vector<Subspace> piece_spaces;
    for (int c = 1; c < s; ++c) {
      if (s % c) continue;
      TensorSubspace lp = lie_power_of(res[std::size_t(c - 1)].b, s / c);
      dr.pieces.push_back({c, lp});
      d_sum = sum(d_sum, lp);
      piece_spaces.push_back(lp.space);
    }
    // Q(q-1) cap Q_q = (+) L^(s/c)(B_ck) (+) U_q.
    {
      std::vector<Subspace> parts = piece_spaces;
      parts.push_back(dr.u.space);
      bool ok = is_direct_sum(parts, dr.lower.space);
      std::vector<std::size_t> dims;
      for (const auto& x : parts) dims.push_back(x.dim());
      add_cert("complement", q, ok, 0, ref + ".lower",
               "dim Q(q-1) cap Q_q = " + std::to_string(dr.lower.dim()) + " = " + join_dims(dims));
      if (!ok) throw VerificationError("degree " + std::to_string(q) + ": lower part is not the expected direct sum");
    }
    try {
      dr.complement_data = complement_data_impl(q, k, n, p, dr.lie, res);
    } catch (const PreconditionError&) {
      dr.complement_data.reset();
    }
    if (dr.complement_data) {
      const auto& cd = *dr.complement_data;
      std::ostringstream os;
      os << "dim U' = " << cd.u_prime.dim() << ", U' cap L = C " << (cd.intersection_ok ? "holds" : "fails")
         << " (dim C = " << cd.c.dim() << "), rank of phi on U' + L = " << cd.phi_rank << " of "
         << cd.expected_rank << ", class dimension " << cd.class_dim
         << (cd.genuine_idempotent ? "" : " (phi through D_(q/k))");
      add_cert("modified_pbw_data", q, cd.ok(), 0, ref + ".complement_data", os.str());
    }

    std::vector<std::string> routes;
    if (q % p != 0) routes.push_back("dynkin");
    if (q <= 7 && dr.complement_data && dr.complement_data->ok() && dr.complement_data->genuine_idempotent)
      routes.push_back("modified_pbw");
    routes.push_back("solver");

    auto attempt = [&](const TensorSubspace& w, int stage, const std::string& method) -> bool {
      if (!dr.lie.space.contains(w.space)) return false;
      for (const auto& g : ta.action.generators())
        if (!w.space.is_invariant(g)) return false;
      if (!is_direct_sum({dr.lower.space, w.space}, dr.lie.space)) return false;
      DegreeResult trial = dr;
      trial.w = w;
      trial.b = sum(dr.u, w);
      if (trial.b.dim() != dr.u.dim() + w.dim()) return false;
      std::vector<Subspace> parts = piece_spaces;
      parts.push_back(trial.b.space);
      if (!is_direct_sum(parts, dr.lie.space)) return false;
      auto cert = certify_summand(ta, trial, d_sum, routes);
      if (!cert) return false;
      trial.stage = stage;
      trial.complement_method = method;
      trial.certificate_method = cert->method;
      trial.projection = std::move(cert->projection);
      dr = std::move(trial);
      return true;
    };

    bool done = false;
    if (s == 1) {
      done = attempt(dr.lie, 1, "none");
    } else {
      bool stage1_group = true;
      if (q <= 6 && options.multilinear) {
        stage1_group = false;
        try {
          done = attempt(multilinear_complement(q, k, n, f), 1, "multilinear");
        } catch (const std::exception&) {
          done = false;
        }
      }
      if (!done) {
        auto w = group_complement(ta, dr.lower, dr.lie, 0);
        if (w) done = attempt(*w, stage1_group ? 1 : 2, "solver");
      }
      for (int seed = 1; !done && seed <= options.max_search; ++seed) {
        auto w = group_complement(ta, dr.lower, dr.lie, std::uint64_t(seed));
        if (w) done = attempt(*w, 3, "solver (seed " + std::to_string(seed) + ")");
      }
    }
    if (!done)
      throw SearchExhausted("degree " + std::to_string(q) + ": no certified complement after " +
                            std::to_string(options.max_search) + " randomized attempts");

    add_cert("lie_containment", q, dr.lie.space.contains(dr.b.space), dr.stage, ref + ".B",
             "dim B = " + std::to_string(dr.b.dim()));
    {
      std::vector<Subspace> parts = piece_spaces;
      parts.push_back(dr.b.space);
      std::vector<std::size_t> dims;
      for (const auto& x : parts) dims.push_back(x.dim());
      add_cert("direct_sum", q, is_direct_sum(parts, dr.lie.space), dr.stage, ref + ".pieces",
               "dim L^" + std::to_string(q) + " = " + std::to_string(dr.lie.dim()) + " = " + join_dims(dims));
    }
    add_cert("summand_projection", q, verify_projection(ta.action, dr.projection).ok(), dr.stage, ref + ".projection",
             dr.certificate_method + ", complement " + dr.complement_method);
    res.push_back(std::move(dr));
  }
  out.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------- re-certification

std::vector<Certificate> certify_decomposition(const DecompositionResult& result) {
  std::vector<Certificate> out;
  const PrimeField f(static_cast<std::uint32_t>(result.p));
  const auto gens = gl_generators(result.n, std::uint32_t(result.p));
  for (std::size_t i = 0; i < result.degrees.size(); ++i) {
    const DegreeResult& dr = result.degrees[i];
    const int q = dr.degree;
    const std::string ref = "results[" + std::to_string(i) + "]";
    if (q != result.k * dr.s) {
      out.push_back({"direct_sum", std::to_string(q), false, dr.stage, ref, "degree is not s*k"});
      continue;
    }
    TensorSubspace lie = lie_power(result.n, q, f);
    out.push_back({"lie_containment", std::to_string(q), lie.space.contains(dr.b.space), dr.stage, ref + ".B",
                   "dim B = " + std::to_string(dr.b.dim())});
    std::vector<Subspace> parts;
    std::vector<std::size_t> dims;
    bool have_all = true;
    for (int c = 1; c < dr.s; ++c) {
      if (dr.s % c) continue;
      const DegreeResult* lower = result.at_degree(c * result.k);
      if (!lower) {
        have_all = false;
        break;
      }
      parts.push_back(lie_power_of(lower->b, dr.s / c).space);
      dims.push_back(parts.back().dim());
    }
    parts.push_back(dr.b.space);
    dims.push_back(dr.b.dim());
    out.push_back({"direct_sum", std::to_string(q), have_all && is_direct_sum(parts, lie.space), dr.stage,
                   ref + ".pieces", "dim L^" + std::to_string(q) + " = " + std::to_string(lie.dim()) + " = " + join_dims(dims)});
    TensorAction ta = induce_on_tensor_power(gens, q);
    bool proj_ok = dr.projection.image == dr.b.space && dr.projection.domain.is_full() &&
                   dr.projection.domain.ambient_dim() == power(result.n, q) &&
                   verify_projection(ta.action, dr.projection).ok();
    out.push_back({"summand_projection", std::to_string(q), proj_ok, dr.stage, ref + ".projection",
                   dr.certificate_method});
  }
  return out;
}

std::vector<Certificate> check_truncation(const DecompositionResult& big, const DecompositionResult& small) {
  std::vector<Certificate> out;
  if (big.p != small.p || big.k != small.k || big.n < small.n)
    throw PreconditionError("truncation compares families with the same p and k, larger n first");
  for (const auto& d : small.degrees) {
    const DegreeResult* b = big.at_degree(d.degree);
    if (!b) continue;
    bool ok = truncate(b->b, small.n) == d.b;
    out.push_back({"truncation", std::to_string(d.degree), ok, d.stage, "",
                   "truncate(B^(" + std::to_string(big.n) + "), " + std::to_string(small.n) + ") = B^(" +
                       std::to_string(small.n) + ")"});
  }
  return out;
}

}  // namespace liepowers
