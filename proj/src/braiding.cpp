// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/braiding.hpp"

#include <stdexcept>

#include "qhowe/linalg.hpp"

namespace qhowe {

namespace {

void check_rank(int n) {
  if (n < 2) throw std::invalid_argument("braiding needs n >= 2");
}

QMatrix::Column scaled(const QMatrix::Column& v, const QLaurent& c) {
  QMatrix::Column out;
  for (const auto& e : v) out.push_back({e.row, c * e.value});
  return QMatrix::normalize(std::move(out));
}

std::string pair_label(int n, std::size_t idx) {
  const int i = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
  const int j = static_cast<int>(idx / static_cast<std::size_t>(n)) + 1;
  return "v" + std::to_string(i) + "(x)v" + std::to_string(j);
}

QMatrix flip(int n) {
  QMatrix f(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) f.set_column(pair_index(n, i, j), {{pair_index(n, j, i), QLaurent(1)}});
  }
  return f;
}

}  // namespace

Weight Weight::eps(int i, int p) {
  if (i < 1 || i > p) throw std::out_of_range("eps index");
  Weight w{std::vector<int>(static_cast<std::size_t>(p), 0)};
  w.components[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.components.size() != b.components.size()) throw std::invalid_argument("weight length");
  Weight w = a;
  for (std::size_t k = 0; k < w.components.size(); ++k) w.components[k] += b.components[k];
  return w;
}

Weight operator*(int k, const Weight& a) {
  Weight w = a;
  for (auto& c : w.components) c *= k;
  return w;
}

long inner(const Weight& a, const Weight& b) {
  if (a.components.size() != b.components.size()) throw std::invalid_argument("weight length");
  long s = 0;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    s += static_cast<long>(a.components[k]) * b.components[k];
  }
  return s;
}

long casimir_eig(const Weight& lambda, int p, int rho_shift) {
  if (static_cast<int>(lambda.components.size()) != p) throw std::invalid_argument("weight length != p");
  Weight shifted = lambda;
  for (int k = 0; k < p; ++k) {
    shifted.components[static_cast<std::size_t>(k)] += 2 * (p - 1 - k + rho_shift);
  }
  return inner(lambda, shifted);
}

SignedQPower braiding_eigenvalue(const Weight& mu, const Weight& nu, int p, int rho_shift) {
  check_rank(p);
  const Weight e1 = Weight::eps(1, p);
  const Weight e2 = Weight::eps(2, p);
  if (!(mu == e1)) throw std::invalid_argument("only mu = eps_1 is supported");
  const bool sym = nu == 2 * e1;
  if (!sym && !(nu == e1 + e2)) throw std::invalid_argument("nu is not a constituent of V (x) V");
  const long twice = casimir_eig(nu, p, rho_shift) - 2 * casimir_eig(mu, p, rho_shift);
  if (twice % 2 != 0) throw std::invalid_argument("non-integral braiding exponent");
  // sign: flip eigenvalue of the q = 1 highest-weight vector
  const QMatrix::Column hw = sym ? symmetric_eigenvectors(p)[0] : antisymmetric_eigenvectors(p)[0];
  QMatrix::Column at_one;
  for (const auto& e : hw) at_one.push_back({e.row, QLaurent(specialize(e.value, 1))});
  at_one = QMatrix::normalize(std::move(at_one));
  const QMatrix::Column flipped = flip(p).apply(at_one);
  int sign = 0;
  if (flipped == at_one) sign = 1;
  if (flipped == scaled(at_one, QLaurent(-1))) sign = -1;
  if (sign == 0) throw std::logic_error("highest-weight vector is not a flip eigenvector");
  return {sign, static_cast<int>(twice / 2)};
}

std::size_t pair_index(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("tensor index");
  return static_cast<std::size_t>((i - 1) + n * (j - 1));
}

std::vector<QMatrix::Column> symmetric_eigenvectors(int n) {
  std::vector<QMatrix::Column> out;
  for (int i = 1; i <= n; ++i) out.push_back({{pair_index(n, i, i), QLaurent(1)}});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(QMatrix::normalize(
          {{pair_index(n, i, j), QLaurent(1)}, {pair_index(n, j, i), QLaurent::q(1)}}));
    }
  }
  return out;
}

std::vector<QMatrix::Column> antisymmetric_eigenvectors(int n) {
  std::vector<QMatrix::Column> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(QMatrix::normalize(
          {{pair_index(n, i, j), QLaurent(1)}, {pair_index(n, j, i), -QLaurent::q(-1)}}));
    }
  }
  return out;
}

QMatrix build_rhat_from_eigenvalues(int n, const QLaurent& sym_eig, const QLaurent& anti_eig) {
  check_rank(n);
  QMatrix r(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i) r.set_column(pair_index(n, i, i), {{pair_index(n, i, i), sym_eig}});
  // With s = a + q b and t = a - q^-1 b for a = v_i(x)v_j, b = v_j(x)v_i:
  //   a = (q^-1 s + q t)/D,  b = (s - t)/D,  D = q + q^-1.
  const QLaurent qq = QLaurent::q(1);
  const QLaurent qi = QLaurent::q(-1);
  const QLaurent d = qq + qi;
  const QLaurent ra_a = exact_div(qi * sym_eig + qq * anti_eig, d);
  const QLaurent ra_b = exact_div(sym_eig - anti_eig, d);
  const QLaurent rb_a = ra_b;
  const QLaurent rb_b = exact_div(qq * sym_eig + qi * anti_eig, d);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t a = pair_index(n, i, j);
      const std::size_t b = pair_index(n, j, i);
      r.set_column(a, {{a, ra_a}, {b, ra_b}});
      r.set_column(b, {{a, rb_a}, {b, rb_b}});
    }
  }
  return r;
}

QMatrix build_rhat(int n) {
  const Weight e1 = Weight::eps(1, n);
  const auto sym = braiding_eigenvalue(e1, 2 * e1, n);
  const auto anti = braiding_eigenvalue(e1, e1 + Weight::eps(2, n), n);
  return build_rhat_from_eigenvalues(n, sym.value(), anti.value());
}

Report check_yang_baxter(const QMatrix& rhat, int n) {
  Report report("yang_baxter");
  const QMatrix id = QMatrix::identity(static_cast<std::size_t>(n));
  const QMatrix r1 = kron(rhat, id);
  const QMatrix r2 = kron(id, rhat);
  auto lhs = r1 * r2 * r1;
  auto rhs = r2 * r1 * r2;
  CheckResult c{"R1 R2 R1 = R2 R1 R2", {n}, true, std::nullopt, {}};
  if (auto col = lhs.first_difference(rhs)) {
    c.pass = false;
    c.witness = "column " + std::to_string(*col);
  }
  report.add(std::move(c));
  return report;
}

Report check_hecke(const QMatrix& rhat, int n) {
  Report report("hecke");
  const QMatrix id = QMatrix::identity(static_cast<std::size_t>(n * n));
  const QMatrix prod = (rhat - QLaurent::q(1) * id) * (rhat + QLaurent::q(-1) * id);
  report.add(compare_matrices("(R - q)(R + q^-1) = 0", {n}, prod, QMatrix(id.dim()),
                              [n](std::size_t j) { return pair_label(n, j); }));
  return report;
}

Report check_intertwiner(const QMatrix& rhat, int n) {
  Report report("intertwiner");
  const Representation nat = natural_rep(n);
  const Representation vv = coproduct_rep({nat, nat}, Coproduct::Standard);
  for (const auto& g : all_generators(n)) {
    report.add(compare_matrices("[R, Delta(" + to_string(g) + ")] = 0", {g.index}, rhat * vv(g),
                                vv(g) * rhat, [n](std::size_t j) { return pair_label(n, j); }));
  }
  return report;
}

Report check_classical_limit(const QMatrix& rhat, int n) {
  Report report("classical_limit");
  const RMatrix at_one = specialize(rhat, Rational(1));
  const RMatrix f = specialize(flip(n), Rational(1));
  CheckResult c{"R at q=1 = flip", {n}, true, std::nullopt, {}};
  if (auto col = at_one.first_difference(f)) {
    c.pass = false;
    c.witness = pair_label(n, *col);
  }
  report.add(std::move(c));
  return report;
}

Report check_eigenvalues(const QMatrix& rhat, int n) {
  Report report("eigenvalues");
  const Weight e1 = Weight::eps(1, n);
  const QLaurent sym = braiding_eigenvalue(e1, 2 * e1, n).value();
  const QLaurent anti = braiding_eigenvalue(e1, e1 + Weight::eps(2, n), n).value();
  int k = 0;
  for (const auto& v : symmetric_eigenvectors(n)) {
    ++k;
    report.add("R s = " + sym.to_string() + " s", {k}, rhat.apply(v) == scaled(v, sym));
  }
  k = 0;
  for (const auto& v : antisymmetric_eigenvectors(n)) {
    ++k;
    report.add("R t = " + anti.to_string() + " t", {k}, rhat.apply(v) == scaled(v, anti));
  }
  return report;
}

Report check_highest_weight_vectors(int n) {
  check_rank(n);
  Report report("highest_weight_vectors");
  const Representation nat = natural_rep(n);
  const Representation vv = coproduct_rep({nat, nat}, Coproduct::Standard);
  const Weight e1 = Weight::eps(1, n);
  struct Hw {
    const char* name;
    QMatrix::Column vec;
    Weight weight;
  };
  const std::vector<Hw> hws{
      {"v1(x)v1", symmetric_eigenvectors(n)[0], 2 * e1},
      {"v1(x)v2 - q^-1 v2(x)v1", antisymmetric_eigenvectors(n)[0], e1 + Weight::eps(2, n)}};
  for (const auto& hw : hws) {
    for (int i = 1; i < n; ++i) {
      report.add(std::string("Delta(E) kills ") + hw.name, {i}, vv.E(i).apply(hw.vec).empty());
      const int a = hw.weight.components[static_cast<std::size_t>(i - 1)] -
                    hw.weight.components[static_cast<std::size_t>(i)];
      report.add(std::string("Delta(K) weight of ") + hw.name, {i},
                 vv.K(i).apply(hw.vec) == scaled(hw.vec, QLaurent::q(a)));
    }
  }
  return report;
}

Sym2Dims sym2q_dims(int n) {
  check_rank(n);
  Sym2Dims out{0, 0, Report("sym2q_dims")};
  const QMatrix rhat = build_rhat(n);
  const auto eig = symmetric_eigenvectors(n);
  const int expected = n * (n + 1) / 2;
  bool exact = true;
  for (const auto& v : eig) exact = exact && rhat.apply(v) == scaled(v, QLaurent::q(1));
  out.report.add("listed vectors are +q eigenvectors", {n}, exact);
  int nullity = -1;
  for (int value : {2, 3}) {
    const Rational qv = value;
    std::vector<SparseVec> spec;
    for (const auto& v : eig) {
      SparseVec s;
      for (const auto& e : v) s.push_back({e.row, specialize(e.value, qv)});
      spec.push_back(SparseVec(RMatrix::normalize(std::move(s))));
    }
    const auto independent = static_cast<int>(rank_of(spec));
    out.report.add("listed vectors independent at q=" + std::to_string(value), {n},
                   independent == expected);
    const QMatrix shifted = rhat - QLaurent::q(1) * QMatrix::identity(rhat.dim());
    const int kernel = n * n - static_cast<int>(matrix_rank(specialize(shifted, qv)));
    out.report.add("nullity of R - q at q=" + std::to_string(value), {n}, kernel == expected,
                   std::nullopt, "nullity " + std::to_string(kernel));
    if (nullity < 0) nullity = kernel;
  }
  out.sym = nullity;
  out.quotient = n * n - nullity;
  out.report.extra = {{"sym", out.sym}, {"quotient", out.quotient}};
  return out;
}

Report braiding_suite(int n) {
  Report report("braiding_n" + std::to_string(n));
  const QMatrix rhat = build_rhat(n);
  report.absorb(check_yang_baxter(rhat, n));
  report.absorb(check_hecke(rhat, n));
  report.absorb(check_intertwiner(rhat, n));
  report.absorb(check_classical_limit(rhat, n));
  report.absorb(check_eigenvalues(rhat, n));
  report.absorb(check_highest_weight_vectors(n));
  report.absorb(sym2q_dims(n).report);
  return report;
}

}  // namespace qhowe
