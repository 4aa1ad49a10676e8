// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/duality.hpp"

#include <map>
#include <stdexcept>

#include "qhowe/embeddings.hpp"
#include "qhowe/linalg.hpp"

namespace qhowe {

namespace {

void require_box(const Partition& mu, const GridShape& shape) {
  if (!mu.fits_in_box(shape.n, shape.m)) {
    throw std::invalid_argument("partition " + mu.to_string() + " does not fit in a " +
                                std::to_string(shape.n) + " x " + std::to_string(shape.m) +
                                " box");
  }
}

std::string op_name(const char* map, const QGroupGen& g) {
  return std::string(map) + "(" + to_string(g) + ")";
}

/// First basis state where a and b differ.
std::optional<std::string> vector_difference(const QVector& a, const QVector& b) {
  if (a == b) return std::nullopt;
  const QVector d = a - b;
  return BasisState(a.length(), d.entries().begin()->first).to_string();
}

struct Lowering {
  std::vector<RMatrix> ops;
};

Lowering lowering_ops(const GridShape& shape, const Rational& value, int cap) {
  Lowering out;
  for (int i = 1; i < shape.n; ++i) {
    out.ops.push_back(specialize(to_matrix(lambda_q(shape, {QGenKind::F, i, shape.n}), cap), value));
  }
  for (int j = 1; j < shape.m; ++j) {
    out.ops.push_back(specialize(to_matrix(rho_q(shape, {QGenKind::F, j, shape.m}), cap), value));
  }
  return out;
}

struct Closure {
  std::vector<SparseVec> vectors;
  bool capped = false;
};

/// Breadth-first closure of `start` under `ops`, one round per layer.
Closure close_under(const SparseVec& start, const std::vector<RMatrix>& ops, long round_cap) {
  Closure out;
  Echelon basis;
  if (!basis.insert(start)) return out;
  out.vectors.push_back(start);
  std::vector<SparseVec> frontier{start};
  long rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > round_cap) {
      out.capped = true;
      break;
    }
    std::vector<SparseVec> next;
    for (const auto& v : frontier) {
      for (const auto& op : ops) {
        SparseVec w = op.apply(v);
        if (w.empty()) continue;
        if (basis.insert(w)) {
          out.vectors.push_back(w);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::uint64_t full_mask(int sites) {
  return sites == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sites) - 1;
}

}  // namespace

BasisState young_state(const Partition& mu, const GridShape& shape) {
  require_box(mu, shape);
  BasisState s = BasisState::vacuum(shape.sites());
  for (int i = 1; i <= shape.n; ++i) {
    for (int j = 1; j <= mu.part(i); ++j) s = s.with_occupied(shape.linear(i, j));
  }
  return s;
}

QVector hwv(const Partition& mu, const GridShape& shape, Flavor /*flavor*/) {
  return QVector::basis(young_state(mu, shape));
}

Report verify_hwv_vector(const QVector& v, const Partition& mu, const GridShape& shape,
                         Flavor flavor) {
  require_box(mu, shape);
  const Partition conj = mu.conjugate();
  const bool quantum = flavor == Flavor::Quantum;
  Report report(quantum ? "hwv_quantum" : "hwv_classical");
  const int n = shape.n;
  const int m = shape.m;
  const QVector zero(shape.sites());

  auto expect = [&](const std::string& rel, std::vector<int> idx, const std::string& op,
                    const QVector& lhs, const QVector& rhs) {
    auto diff = vector_difference(lhs, rhs);
    report.add(rel, std::move(idx), !diff, diff ? std::optional(op + " at " + *diff) : std::nullopt);
  };

  for (int i = 1; i < n; ++i) {
    const QGroupGen e(QGenKind::E, i, n);
    const auto op = quantum ? lambda_q(shape, e) : classical_lambda(shape, e);
    expect("lambda_E_kills", {i}, op_name(quantum ? "lambda_q" : "lambda", e), apply(op, v), zero);
  }
  for (int j = 1; j < m; ++j) {
    const QGroupGen e(QGenKind::E, j, m);
    const auto op = quantum ? rho_q(shape, e) : classical_rho(shape, e);
    expect("rho_E_kills", {j}, op_name(quantum ? "rho_q" : "rho", e), apply(op, v), zero);
  }
  if (quantum) {
    for (int i = 1; i < n; ++i) {
      const QGroupGen k(QGenKind::K, i, n);
      expect("lambda_K_weight", {i}, op_name("lambda_q", k), apply(lambda_q(shape, k), v),
             QLaurent::q(mu.part(i) - mu.part(i + 1)) * v);
    }
    for (int j = 1; j < m; ++j) {
      const QGroupGen k(QGenKind::K, j, m);
      expect("rho_K_weight", {j}, op_name("rho_q", k), apply(rho_q(shape, k), v),
             QLaurent::q(conj.part(j) - conj.part(j + 1)) * v);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      const QGroupGen l(QGenKind::L, i, n);
      expect("lambda_Lbar_weight", {i}, "lambda(Lbar_" + std::to_string(i) + ")",
             apply(classical_lambda(shape, l), v), QLaurent(static_cast<long>(mu.part(i))) * v);
    }
    for (int j = 1; j <= m; ++j) {
      const QGroupGen l(QGenKind::L, j, m);
      expect("rho_Lbar_weight", {j}, "rho(Lbar_" + std::to_string(j) + ")",
             apply(classical_rho(shape, l), v), QLaurent(static_cast<long>(conj.part(j))) * v);
    }
  }
  return report;
}

Report verify_hwv(const Partition& mu, const GridShape& shape, Flavor flavor) {
  return verify_hwv_vector(hwv(mu, shape, flavor), mu, shape, flavor);
}

long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long out = 1;
  for (int k = 1; k <= b; ++k) out = out * (a - b + k) / k;
  return out;
}

long weyl_dim(const Partition& mu, int p) {
  if (mu.length() > p) throw std::invalid_argument("partition longer than rank");
  Rational d = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) d *= Rational(mu.part(i) - mu.part(j) + j - i, j - i);
  }
  d.canonicalize();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p()) {
    throw std::logic_error("Weyl dimension is not a machine integer");
  }
  return d.get_num().get_si();
}

Report dimension_identity(int n, int m) {
  Report report("dimension_identity");
  const auto parts = partitions_in_box(n, m);
  std::vector<long> profile(static_cast<std::size_t>(n * m + 1), 0);
  for (const auto& mu : parts) {
    profile[static_cast<std::size_t>(mu.size())] +=
        weyl_dim(mu, n) * weyl_dim(mu.conjugate(), m);
  }
  long total = 0;
  for (int k = 0; k <= n * m; ++k) {
    const long want = binomial(n * m, k);
    const long got = profile[static_cast<std::size_t>(k)];
    total += got;
    report.add("degree_sum", {k}, got == want, std::nullopt,
               std::to_string(got) + " vs binomial " + std::to_string(want));
  }
  const bool ok = n * m < 63 && total == (1L << (n * m));
  report.add("total", {n, m}, ok, std::nullopt, std::to_string(total));
  report.extra["degree_profile"] = profile;
  return report;
}

Report cyclic_span_dims(int n, int m, const std::vector<Rational>& spec_values, int cap) {
  const GridShape shape(n, m);
  if (shape.sites() > 16 || shape.sites() > cap) {
    throw CapExceeded("cyclic_span_dims needs nm <= 16 and nm <= cap");
  }
  if (spec_values.empty()) throw std::invalid_argument("no specialization values");
  for (const auto& s : spec_values) {
    if (is_zero(s) || s == 1 || s == -1) {
      throw std::invalid_argument("specialization value must be nonzero and not +-1");
    }
  }
  Report report("decomposition");
  const auto parts = partitions_in_box(n, m);
  const std::size_t dim = std::size_t{1} << shape.sites();

  // span_dims[s][mu]
  std::vector<std::vector<std::size_t>> span_dims(spec_values.size());
  for (std::size_t s = 0; s < spec_values.size(); ++s) {
    const Rational& value = spec_values[s];
    const std::string tag = "q=" + value.get_str();
    const Lowering low = lowering_ops(shape, value, cap);
    Echelon joint;
    std::vector<std::size_t> profile(static_cast<std::size_t>(shape.sites() + 1), 0);
    std::size_t total = 0;
    for (const auto& mu : parts) {
      const long want = weyl_dim(mu, n) * weyl_dim(mu.conjugate(), m);
      const SparseVec start{{young_state(mu, shape).bits(), Rational(1)}};
      const Closure c = close_under(start, low.ops, want + 1);
      const std::size_t got = c.vectors.size();
      span_dims[s].push_back(got);
      report.add("span_dim " + mu.to_string() + " " + tag, mu.parts(),
                 !c.capped && static_cast<long>(got) == want, std::nullopt,
                 std::to_string(got) + " vs " + std::to_string(want) +
                     (c.capped ? " (round cap hit)" : ""));
      profile[static_cast<std::size_t>(mu.size())] += got;
      total += got;
      for (const auto& v : c.vectors) joint.insert(v);
    }
    for (int k = 0; k <= shape.sites(); ++k) {
      const auto got = profile[static_cast<std::size_t>(k)];
      const long want = binomial(shape.sites(), k);
      report.add("degree_sum " + tag, {k}, static_cast<long>(got) == want, std::nullopt,
                 std::to_string(got) + " vs " + std::to_string(want));
    }
    report.add("total " + tag, {n, m}, total == dim, std::nullopt,
               std::to_string(total) + " vs " + std::to_string(dim));
    report.add("joint_span " + tag, {n, m}, joint.rank() == dim, std::nullopt,
               std::to_string(joint.rank()) + " vs " + std::to_string(dim));
  }

  bool anomaly = false;
  for (std::size_t s = 1; s < spec_values.size(); ++s) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (span_dims[s][k] != span_dims[0][k]) {
        anomaly = true;
        report.add("SpecializationAnomaly", parts[k].parts(), false,
                   "q=" + spec_values[s].get_str(),
                   std::to_string(span_dims[s][k]) + " vs " + std::to_string(span_dims[0][k]) +
                       " at q=" + spec_values[0].get_str());
      }
    }
  }

  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::size_t> degree_profile(static_cast<std::size_t>(shape.sites() + 1), 0);
  std::size_t total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Partition& mu = parts[k];
    const Partition conj = mu.conjugate();
    const Report hq = verify_hwv(mu, shape, Flavor::Quantum);
    const Report hc = verify_hwv(mu, shape, Flavor::Classical);
    report.absorb(hq, mu.to_string() + " ");
    report.absorb(hc, mu.to_string() + " ");
    const long want = weyl_dim(mu, n) * weyl_dim(conj, m);
    bool span_ok = true;
    nlohmann::json by_q = nlohmann::json::object();
    for (std::size_t s = 0; s < spec_values.size(); ++s) {
      by_q[spec_values[s].get_str()] = span_dims[s][k];
      span_ok = span_ok && static_cast<long>(span_dims[s][k]) == want;
    }
    rows.push_back({{"mu", mu.parts()},
                    {"mu_conj", conj.parts()},
                    {"dim_n", weyl_dim(mu, n)},
                    {"dim_m", weyl_dim(conj, m)},
                    {"span_dim", span_dims[0][k]},
                    {"span_dims", by_q},
                    {"hwv_state", young_state(mu, shape).to_string()},
                    {"checks",
                     {{"hwv_quantum", hq.passed() ? "pass" : "fail"},
                      {"hwv_classical", hc.passed() ? "pass" : "fail"},
                      {"span", span_ok ? "pass" : "fail"}}}});
    degree_profile[static_cast<std::size_t>(mu.size())] += span_dims[0][k];
    total += span_dims[0][k];
  }
  report.extra["n"] = n;
  report.extra["m"] = m;
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& s : spec_values) qs.push_back(s.get_str());
  report.extra["spec_values"] = qs;
  report.extra["partitions"] = rows;
  report.extra["total"] = total;
  report.extra["degree_profile"] = degree_profile;
  report.extra["status"] = report.passed() ? "pass" : (anomaly ? "anomaly" : "fail");
  return report;
}

Report multiplicity_free_check(int n, int m, const Rational& spec_value, int cap) {
  const GridShape shape(n, m);
  if (shape.sites() > cap) throw CapExceeded("multiplicity_free_check: nm exceeds cap");
  Report report("multiplicity_free");
  const int sites = shape.sites();
  const std::uint64_t dim = std::uint64_t{1} << sites;

  std::vector<RMatrix> raise;
  for (int i = 1; i < n; ++i) {
    raise.push_back(specialize(to_matrix(lambda_q(shape, {QGenKind::E, i, n}), cap), spec_value));
  }
  for (int j = 1; j < m; ++j) {
    raise.push_back(specialize(to_matrix(rho_q(shape, {QGenKind::E, j, m}), cap), spec_value));
  }

  // joint weight -> states
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::uint64_t>> spaces;
  for (std::uint64_t bits = 0; bits < dim; ++bits) {
    const GridWeights w = row_col_weights(shape, BasisState(sites, bits));
    spaces[{w.rows, w.cols}].push_back(bits);
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, Partition> expected;
  for (const auto& mu : partitions_in_box(n, m)) {
    std::vector<int> rows(static_cast<std::size_t>(n));
    std::vector<int> cols(static_cast<std::size_t>(m));
    const Partition conj = mu.conjugate();
    for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i - 1)] = mu.part(i);
    for (int j = 1; j <= m; ++j) cols[static_cast<std::size_t>(j - 1)] = conj.part(j);
    expected.emplace(std::make_pair(rows, cols), mu);
  }

  long kernel_total = 0;
  for (const auto& [weight, states] : spaces) {
    // stacked raising operators restricted to this weight space; row index
    // op * dim + target state
    Echelon image;
    for (auto bits : states) {
      SparseVec col;
      for (std::size_t op = 0; op < raise.size(); ++op) {
        for (const auto& e : raise[op].column(bits)) {
          col.push_back({op * dim + e.row, e.value});
        }
      }
      image.insert(std::move(col));
    }
    const long kernel = static_cast<long>(states.size()) - static_cast<long>(image.rank());
    kernel_total += kernel;
    const auto it = expected.find(weight);
    const long want = it == expected.end() ? 0 : 1;
    if (kernel != want || want == 1) {
      const std::string label = it == expected.end() ? "weight" : it->second.to_string();
      std::vector<int> idx = weight.first;
      idx.insert(idx.end(), weight.second.begin(), weight.second.end());
      report.add("kernel_dim " + label, idx, kernel == want, std::nullopt,
                 std::to_string(kernel) + " vs " + std::to_string(want));
    }
  }
  const long want = binomial(n + m, n);
  report.add("kernel_total", {n, m}, kernel_total == want, std::nullopt,
             std::to_string(kernel_total) + " vs " + std::to_string(want));
  return report;
}

Report hw_bounds_check(int n, int m, int cap) {
  const GridShape shape(n, m);
  if (shape.sites() > cap) throw CapExceeded("hw_bounds_check: nm exceeds cap");
  Report report("hw_bounds");
  const int sites = shape.sites();
  std::vector<OperatorExpr> rows;
  std::vector<OperatorExpr> cols;
  for (int i = 1; i <= n; ++i) rows.push_back(lambda_q(shape, {QGenKind::L, i, n}));
  for (int j = 1; j <= m; ++j) cols.push_back(rho_q(shape, {QGenKind::L, j, m}));

  // L_i = prod w^-1 acts by q^{occupation}; read the exponent off the image
  auto exponent = [](const OperatorExpr& op, const BasisState& s) -> std::optional<int> {
    const QVector img = apply(op, s);
    if (img.size() != 1 || img.entries().begin()->first != s.bits()) return std::nullopt;
    const QLaurent& c = img.entries().begin()->second;
    if (!c.is_monomial() || c.terms().front().second != 1) return std::nullopt;
    return c.terms().front().first;
  };

  bool row_ok = true;
  bool col_ok = true;
  std::optional<std::string> row_witness;
  std::optional<std::string> col_witness;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sites); ++bits) {
    const BasisState s(sites, bits);
    for (const auto& op : rows) {
      const auto e = exponent(op, s);
      if (!e || *e < 0 || *e > m) {
        if (row_ok) row_witness = s.to_string();
        row_ok = false;
      }
    }
    for (const auto& op : cols) {
      const auto e = exponent(op, s);
      if (!e || *e < 0 || *e > n) {
        if (col_ok) col_witness = s.to_string();
        col_ok = false;
      }
    }
  }
  report.add("row_weight_at_most_m", {n, m}, row_ok, row_witness);
  report.add("column_weight_at_most_n", {n, m}, col_ok, col_witness);
  return report;
}

Report fundamental_decomp(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  Report report("fundamental_decomp");
  const QVector zero(n);
  for (int j = 0; j <= n; ++j) {
    const BasisState gamma(n, full_mask(j));
    for (int i = 1; i < n; ++i) {
      const QVector img = apply(phi_q(n, {QGenKind::E, i, n}), gamma);
      auto diff = vector_difference(img, zero);
      report.add("E_kills_gamma", {j, i}, !diff, diff);
    }
    for (int i = 1; i <= n; ++i) {
      const QVector img = apply(phi_q(n, {QGenKind::L, i, n}), gamma);
      const QVector want = QLaurent::q(i <= j ? 1 : 0) * QVector::basis(gamma);
      auto diff = vector_difference(img, want);
      report.add("L_weight_gamma", {j, i}, !diff, diff);
    }
    long count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (BasisState(n, bits).degree() == j) ++count;
    }
    std::vector<int> ones(static_cast<std::size_t>(j), 1);
    const long weyl = weyl_dim(Partition(ones), n);
    report.add("degree_dim", {j}, count == binomial(n, j) && count == weyl, std::nullopt,
               std::to_string(count) + " states, weyl " + std::to_string(weyl));
  }
  return report;
}

Report dual_cauchy_check(int n, int m) {
  if (n < 1 || m < 1 || n > 4 || m > 4) throw std::invalid_argument("dual Cauchy needs 1 <= n, m <= 4");
  const GridShape shape(n, m);
  const int vars = n + m;  // alpha_1..alpha_n, beta_1..beta_m
  Report report("dual_cauchy");

  MultiPoly product = MultiPoly::constant(vars, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      product = product * (MultiPoly::constant(vars, 1) +
                           MultiPoly::variable(vars, i) * MultiPoly::variable(vars, n + j));
    }
  }

  MultiPoly schur_sum(vars);
  for (const auto& mu : partitions_in_box(n, m)) {
    schur_sum += schur_poly(mu, n).embed(vars, 0) * schur_poly(mu.conjugate(), m).embed(vars, n);
  }

  MultiPoly states(vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << shape.sites()); ++bits) {
    const GridWeights w = row_col_weights(shape, BasisState(shape.sites(), bits));
    MultiPoly::Exponents e = w.rows;
    e.insert(e.end(), w.cols.begin(), w.cols.end());
    states.add_term(e, 1);
  }

  report.add("product_equals_schur_sum", {n, m}, product == schur_sum);
  report.add("product_equals_state_sum", {n, m}, product == states);
  report.extra["terms"] = product.terms().size();
  return report;
}

}  // namespace qhowe
