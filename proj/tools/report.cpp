// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "report.hpp"

#include <chrono>
#include <map>
#include <sstream>

namespace liepowers::report {

namespace {

json config(std::optional<int> p, std::optional<int> n, std::optional<int> r, std::optional<int> k,
            std::optional<int> max_degree) {
  auto v = [](std::optional<int> x) { return x ? json(*x) : json(nullptr); };
  return {{"p", v(p)}, {"n", v(n)}, {"r", v(r)}, {"k", v(k)}, {"max_degree", v(max_degree)}};
}

json finish(json cfg, json results, const std::vector<Certificate>& certs, double timing_ms) {
  json c = json::array();
  std::size_t passed = 0;
  for (const auto& cert : certs) {
    c.push_back(certificate_json(cert));
    if (cert.passed) ++passed;
  }
  return {{"config", std::move(cfg)},
          {"results", std::move(results)},
          {"certificates", std::move(c)},
          {"totals", {{"checks", certs.size()}, {"passed", passed}}},
          {"timing_ms", timing_ms}};
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json subspace_json(const TensorSubspace& s) {
  json lines = json::array();
  std::istringstream in(serialize(s));
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

TensorSubspace subspace_from_json(const json& lines) {
  std::string text;
  for (const auto& l : lines) text += l.get<std::string>() + "\n";
  return parse_tensor_subspace(text);
}

// Matrix rows as digit strings (p < 10) or space-separated entries.
json matrix_json(const Matrix& m) {
  json rows = json::array();
  const bool compact = m.field().p() < 10;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string s;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (compact) {
        s += char('0' + m.at(i, j));
      } else {
        if (j) s += ' ';
        s += std::to_string(m.at(i, j));
      }
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, std::size_t n_rows, std::size_t n_cols, const PrimeField& f) {
  if (!rows.is_array() || rows.size() != n_rows) throw PreconditionError("projection has the wrong number of rows");
  Matrix m(n_rows, n_cols, f);
  const bool compact = f.p() < 10;
  for (std::size_t i = 0; i < n_rows; ++i) {
    const std::string s = rows[i].get<std::string>();
    std::vector<long long> vals;
    if (compact) {
      for (char ch : s) {
        if (ch < '0' || ch > '9') throw PreconditionError("bad projection entry in row " + std::to_string(i));
        vals.push_back(ch - '0');
      }
    } else {
      std::istringstream in(s);
      long long v;
      while (in >> v) vals.push_back(v);
    }
    if (vals.size() != n_cols) throw PreconditionError("projection row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (vals[j] < 0 || vals[j] >= static_cast<long long>(f.p()))
        throw PreconditionError("projection entry out of range in row " + std::to_string(i));
      m.set(i, j, std::uint8_t(vals[j]));
    }
  }
  return m;
}

std::string members_string(const PClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.members.size(); ++i) s += (i ? " | " : "") + to_string(c.members[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

json certificate_json(const Certificate& c) {
  return {{"kind", c.kind},   {"degree_or_class", c.degree_or_class}, {"status", c.passed ? "pass" : "fail"},
          {"stage", c.stage}, {"data_ref", c.data_ref},               {"detail", c.detail}};
}

bool all_passed(const json& report) {
  const auto& t = report.at("totals");
  return t.at("checks").get<std::size_t>() > 0 && t.at("checks") == t.at("passed");
}

json dims_report(int p, int n, int r) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_prime(std::uint64_t(p))) throw PreconditionError("p must be prime");
  if (n < 1 || r < 1) throw PreconditionError("n and r must be positive");
  std::size_t total = 1;
  for (int i = 0; i < r; ++i)
    if ((total *= std::size_t(n)) > kDimensionCap) throw PreconditionError("n^r exceeds the dimension cap");
  PbwBasis pbw(n, r, PrimeField(static_cast<std::uint32_t>(p)));
  std::map<std::string, std::size_t> factor;
  for (const auto& level : filtration(pbw)) factor[to_string(level.lambda)] = level.factor_dim;
  json rows = json::array();
  std::vector<Certificate> certs;
  std::uint64_t sum = 0;
  for (const auto& lambda : partitions(r)) {
    std::map<int, int> mult;
    for (int part : lambda.parts) ++mult[part];
    std::string witt;
    for (auto [d, m] : mult)
      witt += (witt.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(witt_dim(n, d));
    const auto hl = higher_lie_dim(n, lambda);
    const auto pf = factor[to_string(lambda)];
    sum += hl;
    rows.push_back({{"partition", to_string(lambda)}, {"witt_dims", witt}, {"higher_lie_dim", hl}, {"pbw_factor_dim", pf}});
    certs.push_back({"pbw_factor", to_string(lambda), pf == hl, 0, "results[" + std::to_string(rows.size() - 1) + "]",
                     "PBW factor " + std::to_string(pf) + ", higher Lie dimension " + std::to_string(hl)});
  }
  certs.push_back({"dimension_total", std::to_string(r), sum == total, 0, "results",
                   "sum " + std::to_string(sum) + ", n^r = " + std::to_string(total)});
  return finish(config(p, n, r, std::nullopt, std::nullopt), rows, certs, ms_since(start));
}

json pclasses_report(int p, int r) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_prime(std::uint64_t(p))) throw PreconditionError("p must be prime");
  if (r < 1 || r > 16) throw PreconditionError("r must be between 1 and 16");
  auto classes = p_equiv_classes(r, p);
  json rows = json::array();
  std::size_t members = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    members += classes[i].members.size();
    rows.push_back({{"class", i}, {"key", to_string(classes[i].key)}, {"size", classes[i].members.size()},
                    {"members", members_string(classes[i])}});
  }
  std::vector<Certificate> certs;
  certs.push_back({"partition_cover", std::to_string(r), members == partitions(r).size(), 0, "results",
                   std::to_string(members) + " partitions in " + std::to_string(classes.size()) + " classes"});
  if (r <= 10) {
    const std::size_t kernel = c_map_kernel_dim(r, p);
    certs.push_back({"c_map_kernel", std::to_string(r), kernel + classes.size() == (std::size_t(1) << (r - 1)), 0,
                     "results", "dim ker c = " + std::to_string(kernel)});
  }
  return finish(config(p, std::nullopt, r, std::nullopt, std::nullopt), rows, certs, ms_since(start));
}

json filtration_report(const FiltrationReport& rep, double timing_ms) {
  json rows = json::array();
  std::vector<Certificate> certs;
  std::size_t total = 0;
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    const auto& c = rep.classes[i];
    total += c.summand.dim();
    std::size_t expected = 0;
    for (auto d : c.expected_factor_dims) expected += d;
    rows.push_back({{"class", i},
                    {"members", members_string(c.cls)},
                    {"summand_dim", c.summand.dim()},
                    {"chain_dims", join(c.chain_dims)},
                    {"expected_factor_dims", join(c.expected_factor_dims)},
                    {"pbw_images_basis", c.pbw_images_basis}});
    const std::string ref = "results[" + std::to_string(i) + "]";
    certs.push_back({"filtration_chain", members_string(c.cls), c.summand.dim() == expected, 0, ref,
                     "dim e_J T^r = " + std::to_string(c.summand.dim()) + ", sum of factors " + std::to_string(expected)});
    certs.push_back({"pbw_image_basis", members_string(c.cls), c.pbw_images_basis, 0, ref, "images of PBW elements with shapes in J"});
  }
  certs.push_back({"direct_sum", std::to_string(rep.r), total == power(rep.n, rep.r), 0, "results",
                   "sum of summands " + std::to_string(total) + " = n^r"});
  return finish(config(rep.p, rep.n, rep.r, std::nullopt, std::nullopt), rows, certs, timing_ms);
}

json decomposition_report(const DecompositionResult& result) {
  json rows = json::array();
  for (const auto& d : result.degrees) {
    json pieces = json::array();
    for (const auto& [c, s] : d.pieces) pieces.push_back({{"c", c}, {"dim", s.dim()}});
    json row = {{"degree", d.degree},
                {"s", d.s},
                {"dim_lie", d.lie.dim()},
                {"dim_lower", d.lower.dim()},
                {"dim_u", d.u.dim()},
                {"dim_w", d.w.dim()},
                {"dim_b", d.b.dim()},
                {"stage", d.stage},
                {"complement_method", d.complement_method},
                {"certificate_method", d.certificate_method},
                {"pieces", pieces},
                {"B", subspace_json(d.b)},
                {"W", subspace_json(d.w)},
                {"projection", {{"rows", d.projection.retraction.rows()},
                                {"cols", d.projection.retraction.cols()},
                                {"retraction", matrix_json(d.projection.retraction)}}}};
    if (d.complement_data) {
      const auto& cd = *d.complement_data;
      row["complement_data"] = {{"dim_u_prime", cd.u_prime.dim()}, {"dim_c", cd.c.dim()},
                                {"intersection_ok", cd.intersection_ok}, {"phi_rank", cd.phi_rank},
                                {"expected_rank", cd.expected_rank}, {"class_dim", cd.class_dim},
                                {"genuine_idempotent", cd.genuine_idempotent}};
    }
    rows.push_back(std::move(row));
  }
  return finish(config(result.p, result.n, std::nullopt, result.k, result.max_degree), rows, result.certificates,
                result.timing_ms);
}

json certification_report(const json& decomposition, const std::vector<Certificate>& certs, double timing_ms) {
  json rows = json::array();
  for (const auto& d : decomposition.at("results"))
    rows.push_back({{"degree", d.at("degree")}, {"dim_b", d.at("dim_b")}});
  return finish(decomposition.at("config"), rows, certs, timing_ms);
}

DecompositionResult decomposition_from_json(const json& report) {
  try {
    DecompositionResult out;
    const auto& cfg = report.at("config");
    out.p = cfg.at("p").get<int>();
    out.n = cfg.at("n").get<int>();
    out.k = cfg.at("k").get<int>();
    out.max_degree = cfg.at("max_degree").get<int>();
    if (!is_prime(std::uint64_t(out.p)) || out.n < 1 || out.k < 1) throw PreconditionError("bad config");
    const PrimeField f(static_cast<std::uint32_t>(out.p));
    for (const auto& row : report.at("results")) {
      DegreeResult d;
      d.degree = row.at("degree").get<int>();
      d.s = row.at("s").get<int>();
      d.stage = row.at("stage").get<int>();
      d.certificate_method = row.at("certificate_method").get<std::string>();
      d.b = subspace_from_json(row.at("B"));
      if (d.b.field().p() != f.p() || d.b.n != out.n || d.b.degree != d.degree)
        throw PreconditionError("B at degree " + std::to_string(d.degree) + " has a mismatched header");
      if (d.degree > 0 && power(out.n, d.degree) > kDimensionCap)
        throw PreconditionError("degree " + std::to_string(d.degree) + " exceeds the dimension cap");
      const auto& proj = row.at("projection");
      const std::size_t total = power(out.n, d.degree);
      d.projection.domain = Subspace::full(total, f);
      d.projection.image = d.b.space;
      d.projection.retraction = matrix_from_json(proj.at("retraction"), total, d.b.dim(), f);
      out.degrees.push_back(std::move(d));
    }
    return out;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed decomposition report: ") + e.what());
  }
}

std::string to_csv(const json& report) {
  const auto& rows = report.at("results");
  std::ostringstream os;
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
    if (it.value().is_primitive()) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string v = row.contains(keys[i]) ? scalar_text(row.at(keys[i])) : "";
      if (v.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        v = q + "\"";
      }
      os << (i ? "," : "") << v;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_text(const json& report) {
  std::ostringstream os;
  const auto& cfg = report.at("config");
  bool first = true;
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (it.value().is_null()) continue;
    os << (first ? "" : " ") << it.key() << "=" << scalar_text(it.value());
    first = false;
  }
  os << "\n";
  for (const auto& row : report.at("results")) {
    for (auto it = row.begin(); it != row.end(); ++it)
      if (it.value().is_primitive()) os << "  " << it.key() << "=" << scalar_text(it.value());
    os << "\n";
  }
  for (const auto& c : report.at("certificates"))
    os << (c.at("status") == "pass" ? "PASS " : "FAIL ") << c.at("kind").get<std::string>() << " "
       << c.at("degree_or_class").get<std::string>() << ": " << c.at("detail").get<std::string>() << "\n";
  os << report.at("totals").at("passed") << "/" << report.at("totals").at("checks") << " checks passed\n";
  return os.str();
}

}  // namespace liepowers::report
