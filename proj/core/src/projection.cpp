// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <algorithm>
#include <sstream>

#include "liepowers/linalg.hpp"

namespace liepowers {

namespace {

// Action of g on `domain` in domain coordinates, kept sparse.
SparseMatrix domain_action(const Subspace& domain, const SparseMatrix& g) {
  if (domain.is_full()) return g;
  return SparseMatrix::from_dense(domain.restricted_action(g));
}

// Rows: coordinates of each row of `rows` inside `container`.
Matrix coordinate_rows(const Matrix& rows, const Subspace& container) {
  Matrix out(rows.rows(), container.dim(), container.field());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto c = container.coordinates(rows.row(i));
    std::copy(c.begin(), c.end(), out.row(i));
  }
  return out;
}

std::uint8_t random_scalar(std::mt19937_64& rng, const PrimeField& f) {
  return std::uint8_t(rng() % f.p());
}

struct Prepared {
  std::size_t d = 0, b = 0;
  Subspace local_image;                 // image in domain coordinates
  std::vector<SparseMatrix> gammas;     // generators on the domain
  std::vector<Matrix> image_actions;    // generators on local_image, its coordinates
  Matrix to_image_coords;               // local_image basis -> image basis coordinates
};

Prepared prepare(const GroupAction& action, const Subspace& image, const Subspace& domain) {
  if (image.field() != action.field() || domain.field() != action.field())
    throw PreconditionError("subspaces and action live over different fields");
  if (image.ambient_dim() != action.dim() || domain.ambient_dim() != action.dim())
    throw PreconditionError("subspaces and action live in different ambient spaces");
  if (!domain.contains(image)) throw PreconditionError("image is not contained in the domain");
  Prepared pr;
  pr.d = domain.dim();
  pr.b = image.dim();
  pr.local_image = in_coordinates(image, domain);
  for (const auto& g : action.generators()) {
    if (!domain.is_invariant(g)) throw PreconditionError("domain is not invariant under the action");
    if (!image.is_invariant(g)) throw PreconditionError("image is not invariant under the action");
    pr.gammas.push_back(domain_action(domain, g));
    pr.image_actions.push_back(pr.local_image.restricted_action(pr.gammas.back()));
  }
  Matrix ambient_rows = pr.local_image.basis() * domain.basis();
  pr.to_image_coords = coordinate_rows(ambient_rows, image);
  return pr;
}

Projection finish(const Prepared& pr, const Subspace& image, const Subspace& domain, const Matrix& local) {
  Projection pi{domain, image, local * pr.to_image_coords};
  return pi;
}

ProjectionSolution trivial_solution(const Prepared& pr, const Subspace& image, const Subspace& domain) {
  ProjectionSolution sol;
  sol.method = "trivial";
  Matrix local(pr.d, pr.b, domain.field());
  if (pr.b == pr.d) local = Matrix::identity(pr.d, domain.field());
  sol.projection = finish(pr, image, domain, local);
  return sol;
}

/* Unknowns are the images of a fixed complement of the image; the
   retraction is affine in them and equivariance is a linear system. */
ProjectionSolution solve_dense(const Prepared& pr, const Subspace& image, const Subspace& domain,
                               const SolveOptions& opt) {
  const PrimeField f = domain.field();
  const std::size_t d = pr.d, b = pr.b;
  const auto& li = pr.local_image;
  const std::vector<std::size_t> qc = li.non_pivots();
  const std::size_t c = qc.size();
  const std::size_t unknowns = c * b;
  if (unknowns > opt.max_dense_unknowns)
    throw std::length_error("dense equivariant solver would need " + std::to_string(unknowns) + " unknowns");

  // coef(k, t): coefficient of X_t in row k of the retraction.
  Matrix coef(d, c, f);
  for (std::size_t t = 0; t < c; ++t) coef.set(qc[t], t, 1);
  std::vector<std::int64_t> pivot_row(d, -1);
  for (std::size_t s = 0; s < b; ++s) {
    pivot_row[li.pivots()[s]] = std::int64_t(s);
    for (std::size_t t = 0; t < c; ++t) coef.set(li.pivots()[s], t, f.neg(li.basis().at(s, qc[t])));
  }

  EchelonBuilder eq(unknowns + 1, f);
  std::vector<std::uint8_t> row(unknowns + 1);
  bool inconsistent = false;
  for (std::size_t gi = 0; gi < pr.gammas.size() && !inconsistent; ++gi) {
    const SparseMatrix& gamma = pr.gammas[gi];
    const Matrix& a = pr.image_actions[gi];
    Matrix gc = gamma.multiply(coef);
    for (std::size_t i = 0; i < d && !inconsistent; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t t = 0; t < c; ++t) row[t * b + j] = gc.at(i, t);
        for (std::size_t t = 0; t < c; ++t) {
          std::uint8_t ct = coef.at(i, t);
          if (!ct) continue;
          for (std::size_t l = 0; l < b; ++l)
            row[t * b + l] = f.sub(row[t * b + l], f.mul(ct, a.at(l, j)));
        }
        // rhs = const2 - const1, const1 = gamma[i, pivot_j], const2 = A[s, j] if i = pivot_s
        std::uint8_t const1 = 0;
        gamma.for_row(i, [&](std::uint32_t col, std::uint8_t v) {
          if (col == li.pivots()[j]) const1 = v;
        });
        std::uint8_t const2 = pivot_row[i] >= 0 ? a.at(std::size_t(pivot_row[i]), j) : 0;
        row[unknowns] = f.sub(const2, const1);
        if (eq.insert(row) && eq.pivot(eq.rank() - 1) == unknowns) inconsistent = true;
      }
    }
  }
  ProjectionSolution sol;
  sol.method = "dense";
  if (inconsistent) {
    sol.infeasibility.reason = "equivariance system is inconsistent";
    sol.infeasibility.rank_coefficients = eq.rank() - 1;
    sol.infeasibility.rank_augmented = eq.rank();
    return sol;
  }
  // Back-substitute with free variables zero or random.
  Matrix sys(0, unknowns + 1, f);
  for (std::size_t i = 0; i < eq.rank(); ++i) sys.append_row(eq.row(i));
  RowEchelon e = rref(sys);
  std::vector<std::uint8_t> x(unknowns, 0);
  std::vector<bool> is_pivot(unknowns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::mt19937_64 rng(opt.seed);
  if (opt.randomize)
    for (std::size_t u = 0; u < unknowns; ++u)
      if (!is_pivot[u]) x[u] = random_scalar(rng, f);
  for (std::size_t r = 0; r < e.rank; ++r) {
    std::size_t pc = e.pivots[r];
    std::uint8_t v = e.form.at(r, unknowns);
    for (std::size_t u = pc + 1; u < unknowns; ++u)
      if (!is_pivot[u] && e.form.at(r, u)) v = f.sub(v, f.mul(e.form.at(r, u), x[u]));
    x[pc] = v;
  }
  Matrix local(d, b, f);
  for (std::size_t k = 0; k < d; ++k) {
    if (pivot_row[k] >= 0) local.set(k, std::size_t(pivot_row[k]), 1);
    for (std::size_t t = 0; t < c; ++t) {
      std::uint8_t ct = coef.at(k, t);
      if (!ct) continue;
      detail::axpy(local.row(k), x.data() + t * b, ct, b, f);
    }
  }
  sol.projection = finish(pr, image, domain, local);
  return sol;
}

// v * (gamma - 1)
std::vector<std::uint8_t> apply_nilpotent(const SparseMatrix& gamma, const std::vector<std::uint8_t>& v) {
  const PrimeField& f = gamma.field();
  std::vector<std::uint8_t> out = gamma.apply(v);
  detail::axpy(out.data(), v.data(), f.neg(1), v.size(), f);
  return out;
}

/* Sylow-relative construction: a complement invariant under P = <t> is built
   from a Jordan basis of t - 1 on the quotient, then averaged over the
   right cosets of P (whose number is prime to p). */
ProjectionSolution solve_structured(const GroupAction& action, const Prepared& pr, const Subspace& image,
                                    const Subspace& domain, const SolveOptions& opt) {
  const PrimeField f = domain.field();
  const CyclicSylow& sy = *action.sylow();
  const std::size_t d = pr.d, b = pr.b;
  const auto& li = pr.local_image;
  const std::vector<std::size_t> qc = li.non_pivots();
  const std::size_t c = qc.size();
  std::mt19937_64 rng(opt.seed);
  ProjectionSolution sol;
  sol.method = "structured";

  if (!domain.is_invariant(sy.generator) || !image.is_invariant(sy.generator))
    throw PreconditionError("subspaces are not invariant under the Sylow generator");
  SparseMatrix gamma_t = domain_action(domain, sy.generator);
  Matrix bq = li.basis().select_columns(qc);  // b x c

  // Nilpotent operator on the quotient, in quotient coordinates.
  Matrix nbar(c, c, f);
  {
    std::vector<std::uint8_t> e(d, 0);
    for (std::size_t t = 0; t < c; ++t) {
      e[qc[t]] = 1;
      auto w = apply_nilpotent(gamma_t, e);
      e[qc[t]] = 0;
      for (std::size_t u = 0; u < c; ++u) nbar.set(t, u, w[qc[u]]);
      for (std::size_t s = 0; s < b; ++s) {
        std::uint8_t ws = w[li.pivots()[s]];
        if (ws) detail::axpy(nbar.row(t), bq.row(s), f.neg(ws), c, f);
      }
    }
  }
  const std::uint32_t height = std::max<std::uint32_t>(1, sy.order);
  std::vector<Subspace> kernels;  // kernels[h] = ker nbar^h, h = 0..height
  kernels.emplace_back(c, f);
  {
    Matrix power = Matrix::identity(c, f);
    for (std::uint32_t h = 1; h <= height; ++h) {
      power = power * nbar;
      if (h == height) {
        if (!power.is_zero()) throw PreconditionError("Sylow generator order does not bound nilpotency");
        kernels.push_back(Subspace::full(c, f));
      } else {
        kernels.push_back(Subspace::span(LinearSolver(power).left_kernel()));
      }
    }
  }

  Matrix jordan(0, c, f);      // Jordan basis in quotient coordinates
  Matrix lifted(0, d, f);      // matching lifts spanning an invariant complement
  std::vector<Matrix> image_powers;  // local image basis times N^h
  image_powers.push_back(li.basis());
  for (std::uint32_t h = height; h >= 1; --h) {
    EchelonBuilder span_lower(c, f);
    for (std::size_t i = 0; i < kernels[h - 1].dim(); ++i) span_lower.insert(kernels[h - 1].basis().row(i));
    if (h < height) {
      Matrix up = kernels[h + 1].basis() * nbar;
      for (std::size_t i = 0; i < up.rows(); ++i) span_lower.insert(up.row(i));
    }
    const Subspace& kh = kernels[h];
    std::vector<std::vector<std::uint8_t>> gens;
    const std::size_t needed = kh.dim() - span_lower.rank();
    std::size_t attempts = 0;
    std::size_t next = 0;
    while (gens.size() < needed) {
      std::vector<std::uint8_t> cand(c, 0);
      if (opt.randomize && attempts < 64 * (needed + 1)) {
        for (std::size_t i = 0; i < kh.dim(); ++i) {
          std::uint8_t s = random_scalar(rng, f);
          if (s) detail::axpy(cand.data(), kh.basis().row(i), s, c, f);
        }
        ++attempts;
      } else {
        if (next >= kh.dim()) throw std::logic_error("Jordan generator selection ran out of candidates");
        std::copy(kh.basis().row(next), kh.basis().row(next) + c, cand.begin());
        ++next;
      }
      if (span_lower.insert(cand)) gens.push_back(cand);
    }
    if (gens.empty()) continue;
    while (image_powers.size() <= h) {
      Matrix next_power(0, d, f);
      const Matrix& prev = image_powers.back();
      for (std::size_t s = 0; s < prev.rows(); ++s) next_power.append_row(apply_nilpotent(gamma_t, prev.row_vector(s)));
      image_powers.push_back(std::move(next_power));
    }
    LinearSolver solver(image_powers[h]);
    for (const auto& g : gens) {
      std::vector<std::uint8_t> v(d, 0);
      for (std::size_t t = 0; t < c; ++t) v[qc[t]] = g[t];
      std::vector<std::uint8_t> w = v;
      for (std::uint32_t k = 0; k < h; ++k) w = apply_nilpotent(gamma_t, w);
      auto x = solver.solve(w);
      if (!x) {
        sol.infeasibility.reason = "image is not a direct summand for the Sylow subgroup";
        sol.infeasibility.witness = domain.vector_from(w);
        return sol;
      }
      std::vector<std::uint8_t> corr = vec_times(*x, li.basis());
      detail::axpy(v.data(), corr.data(), f.neg(1), d, f);
      std::vector<std::uint8_t> gq = g;
      for (std::uint32_t k = 0; k < h; ++k) {
        lifted.append_row(v);
        jordan.append_row(gq);
        v = apply_nilpotent(gamma_t, v);
        gq = vec_times(gq, nbar);
      }
    }
  }
  if (jordan.rows() != c) throw std::logic_error("Jordan basis has the wrong size");

  // Y = J^{-1} * lifted[:, pivots] via elimination on [J | Z].
  Matrix aug(c, c + b, f);
  for (std::size_t i = 0; i < c; ++i) {
    std::copy(jordan.row(i), jordan.row(i) + c, aug.row(i));
    for (std::size_t s = 0; s < b; ++s) aug.set(i, c + s, lifted.at(i, li.pivots()[s]));
  }
  RowEchelon red = rref(std::move(aug));
  if (red.rank != c || (c > 0 && red.pivots.back() != c - 1)) throw std::logic_error("Jordan basis is singular");
  Matrix y(c, b, f);
  for (std::size_t i = 0; i < c; ++i) std::copy(red.form.row(i) + c, red.form.row(i) + c + b, y.row(i));

  Matrix rp(d, b, f);
  for (std::size_t t = 0; t < c; ++t)
    detail::axpy(rp.row(qc[t]), y.row(t), f.neg(1), b, f);
  Matrix by = bq * y;
  for (std::size_t s = 0; s < b; ++s) {
    std::uint8_t* r = rp.row(li.pivots()[s]);
    detail::axpy(r, by.row(s), 1, b, f);
    r[s] = f.add(r[s], 1);
  }

  // Average over right cosets of P.
  Matrix avg(d, b, f);
  for (const auto& [g, ginv] : sy.coset_reps) {
    SparseMatrix gd = domain_action(domain, g);
    SparseMatrix gdi = domain_action(domain, ginv);
    Matrix ag = li.restricted_action(gd);
    avg = avg + gdi.multiply(rp * ag);
  }
  std::uint8_t m = f.from_int((long long)sy.coset_reps.size());
  avg = avg.scaled(f.inv(m));
  sol.projection = finish(pr, image, domain, avg);
  return sol;
}

}  // namespace

Matrix Projection::matrix() const {
  Matrix e(image.dim(), domain.dim(), domain.field());
  for (std::size_t s = 0; s < image.dim(); ++s) {
    auto c = domain.coordinates(image.basis().row(s));
    std::copy(c.begin(), c.end(), e.row(s));
  }
  return retraction * e;
}

std::vector<std::uint8_t> Projection::apply(const std::vector<std::uint8_t>& v) const {
  auto c = domain.try_coordinates(v.data());
  if (!c) throw PreconditionError("vector is not in the projection domain");
  return image.vector_from(vec_times(*c, retraction));
}

std::string ProjectionCheck::describe() const {
  std::ostringstream os;
  os << "image_in_domain=" << image_in_domain << " invariant=" << invariant << " idempotent=" << idempotent
     << " equivariant=" << equivariant << " surjective=" << surjective;
  return os.str();
}

ProjectionCheck verify_projection(const GroupAction& action, const Projection& pi) {
  ProjectionCheck chk;
  const Subspace& dom = pi.domain;
  const Subspace& img = pi.image;
  if (pi.retraction.rows() != dom.dim() || pi.retraction.cols() != img.dim()) return chk;
  if (dom.ambient_dim() != action.dim() || img.ambient_dim() != action.dim()) return chk;
  chk.image_in_domain = dom.contains(img);
  if (!chk.image_in_domain) return chk;
  chk.invariant = true;
  for (const auto& g : action.generators())
    if (!dom.is_invariant(g) || !img.is_invariant(g)) chk.invariant = false;
  // E R = I: pi fixes the image and lands in it, hence pi^2 = pi with image exactly img.
  Matrix e = coordinate_rows(img.basis(), dom);
  chk.idempotent = (e * pi.retraction) == Matrix::identity(img.dim(), img.field());
  chk.surjective = chk.idempotent;
  if (!chk.invariant) return chk;
  chk.equivariant = true;
  for (const auto& g : action.generators()) {
    SparseMatrix gamma = domain_action(dom, g);
    Matrix a = img.restricted_action(g);
    if (!(gamma.multiply(pi.retraction) == pi.retraction * a)) {
      chk.equivariant = false;
      break;
    }
  }
  return chk;
}

Projection compose(const Projection& first, const Projection& second) {
  if (!(first.image == second.domain)) throw PreconditionError("projections do not compose");
  return Projection{first.domain, second.image, first.retraction * second.retraction};
}

ProjectionSolution solve_equivariant_projection(const GroupAction& action, const Subspace& image,
                                                const Subspace& domain, const SolveOptions& options) {
  Prepared pr = prepare(action, image, domain);
  if (pr.b == 0 || pr.b == pr.d) return trivial_solution(pr, image, domain);
  using M = SolveOptions::Method;
  M method = options.method;
  if (method == M::Automatic) method = action.sylow() ? M::Structured : M::Dense;
  if (method == M::Structured && !action.sylow())
    throw PreconditionError("structured solver needs Sylow data on the action");
  ProjectionSolution sol = method == M::Dense ? solve_dense(pr, image, domain, options)
                                              : solve_structured(action, pr, image, domain, options);
  if (sol.projection) {
    ProjectionCheck chk = verify_projection(action, *sol.projection);
    if (!chk.ok()) throw std::logic_error("solver produced an invalid projection: " + chk.describe());
  }
  return sol;
}

}  // namespace liepowers
