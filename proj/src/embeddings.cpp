// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/embeddings.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhowe {

namespace {

using Orientation = KappaFactor::Orientation;

void require_rank(const QGroupGen& g, int rank, const char* what) {
  if (g.rank != rank) {
    throw std::invalid_argument(std::string(what) + " expects a generator of rank " +
                                std::to_string(rank));
  }
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string word_text(const Word& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += " ";
    out += to_string(g);
  }
  return out.empty() ? "1" : out;
}

template <class Scalar>
CheckResult compare_any(std::string relation, std::vector<int> indices,
                        const SparseMatrix<Scalar>& lhs, const SparseMatrix<Scalar>& rhs,
                        int state_length) {
  CheckResult r{std::move(relation), std::move(indices), true, std::nullopt, {}};
  if (auto col = lhs.first_difference(rhs)) {
    r.pass = false;
    r.witness = state_length > 0 ? BasisState(state_length, *col).to_string()
                                 : "e" + std::to_string(*col + 1);
  }
  return r;
}

RMatrix to_rational(const QMatrix& m) {
  return m.map([](const QLaurent& p) {
    if (!p.is_constant()) throw std::invalid_argument("expected a q-free matrix");
    return p.coeff(0);
  });
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::string gen_name(const char* map, const QGroupGen& g) {
  return std::string(map) + "(" + to_string(g) + ")";
}

}  // namespace

std::vector<std::pair<int, int>> KappaFactor::site_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = shape.n;
  switch (orientation) {
    case Orientation::RowBefore:
      for (int p = 1; p < j; ++p) out.emplace_back(shape.linear(i, p), shape.linear(i + 1, p));
      break;
    case Orientation::RowAfter:
      for (int p = j + 1; p <= shape.m; ++p) {
        out.emplace_back(shape.linear(i, p), shape.linear(i + 1, p));
      }
      break;
    case Orientation::ColumnAbove:
      for (int p = 1; p < i; ++p) out.emplace_back(p + (j - 1) * n, p + j * n);
      break;
    case Orientation::ColumnBelow:
      for (int p = i + 1; p <= n; ++p) out.emplace_back(p + (j - 1) * n, p + j * n);
      break;
  }
  return out;
}

Word KappaFactor::omega_word() const {
  Word w;
  for (const auto& [a, b] : site_pairs()) {
    if (inverse) {
      w.push_back(omega(a));
      w.push_back(omega_inv(b));
    } else {
      w.push_back(omega_inv(a));
      w.push_back(omega(b));
    }
  }
  return w;
}

std::vector<QGroupGen> KappaFactor::k_word() const {
  if (orientation != Orientation::RowBefore && orientation != Orientation::RowAfter) {
    throw std::logic_error("column kappa factors have no U_q(gl_nm) form");
  }
  std::vector<QGroupGen> w;
  const int big = shape.sites();
  for (const auto& [a, b] : site_pairs()) {
    (void)b;
    w.emplace_back(inverse ? QGenKind::KInv : QGenKind::K, a, big);
  }
  return w;
}

std::string KappaFactor::to_string() const {
  const std::string si = std::to_string(i);
  const std::string sj = std::to_string(j);
  std::string body;
  switch (orientation) {
    case Orientation::RowBefore:
      body = si + ",<" + sj;
      break;
    case Orientation::RowAfter:
      body = si + ",>" + sj;
      break;
    case Orientation::ColumnAbove:
      body = "<" + si + "," + sj;
      break;
    case Orientation::ColumnBelow:
      body = ">" + si + "," + sj;
      break;
  }
  return "kappa_{" + body + "}" + (inverse ? "^-1" : "");
}

std::string UqElement::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    std::string w;
    for (const auto& g : t.word) {
      if (!w.empty()) w += " ";
      w += qhowe::to_string(g);
    }
    if (w.empty()) w = "1";
    out += t.coeff == QLaurent(1) ? w : "(" + t.coeff.to_string() + ") " + w;
  }
  return out;
}

OperatorExpr phi_q(int p, const QGroupGen& g) {
  require_rank(g, p, "phi_q");
  const int i = g.index;
  switch (g.kind) {
    case QGenKind::E:
      return OperatorExpr::monomial(p, {omega_inv(i), psid(i), psi(i + 1)}, QLaurent::q(-1));
    case QGenKind::F:
      return OperatorExpr::monomial(p, {omega(i), psid(i + 1), psi(i)});
    case QGenKind::K:
      return OperatorExpr::monomial(p, {omega_inv(i), omega(i + 1)});
    case QGenKind::KInv:
      return OperatorExpr::monomial(p, {omega(i), omega_inv(i + 1)});
    case QGenKind::L:
      return OperatorExpr::monomial(p, {omega_inv(i)});
    case QGenKind::LInv:
      return OperatorExpr::monomial(p, {omega(i)});
  }
  throw std::logic_error("unknown generator kind");
}

namespace {

template <class Map>
Representation build_rep(int rank, int sites, int cap, Map map) {
  std::vector<QMatrix> e, f, l, linv;
  for (int i = 1; i < rank; ++i) {
    e.push_back(to_matrix(map(QGroupGen(QGenKind::E, i, rank)), cap));
    f.push_back(to_matrix(map(QGroupGen(QGenKind::F, i, rank)), cap));
  }
  for (int i = 1; i <= rank; ++i) {
    l.push_back(to_matrix(map(QGroupGen(QGenKind::L, i, rank)), cap));
    linv.push_back(to_matrix(map(QGroupGen(QGenKind::LInv, i, rank)), cap));
  }
  return {rank, std::move(e), std::move(f), std::move(l), std::move(linv), sites};
}

template <class Map>
ClassicalRep build_classical(int rank, int sites, int cap, Map map) {
  ClassicalRep rep{rank, {}, {}, {}, sites};
  for (int i = 1; i < rank; ++i) {
    rep.e.push_back(to_matrix(map(QGroupGen(QGenKind::E, i, rank)), cap));
    rep.f.push_back(to_matrix(map(QGroupGen(QGenKind::F, i, rank)), cap));
  }
  for (int i = 1; i <= rank; ++i) {
    rep.lbar.push_back(to_matrix(map(QGroupGen(QGenKind::L, i, rank)), cap));
  }
  return rep;
}

}  // namespace

Representation phi_q_rep(int p, int cap) {
  return build_rep(p, p, cap, [p](const QGroupGen& g) { return phi_q(p, g); });
}

UqElement theta(const GridShape& shape, const QGroupGen& g) {
  require_rank(g, shape.n, "theta");
  const int big = shape.sites();
  const int i = g.index;
  UqElement out{big, {}};
  switch (g.kind) {
    case QGenKind::E:
      for (int j = 1; j <= shape.m; ++j) {
        std::vector<QGroupGen> w{QGroupGen(QGenKind::E, shape.linear(i, j), big)};
        auto tail = KappaFactor{shape, Orientation::RowAfter, i, j}.k_word();
        w.insert(w.end(), tail.begin(), tail.end());
        out.terms.push_back({1, std::move(w)});
      }
      break;
    case QGenKind::F:
      for (int j = 1; j <= shape.m; ++j) {
        auto w = KappaFactor{shape, Orientation::RowBefore, i, j, true}.k_word();
        w.emplace_back(QGenKind::F, shape.linear(i, j), big);
        out.terms.push_back({1, std::move(w)});
      }
      break;
    case QGenKind::K:
    case QGenKind::KInv:
    case QGenKind::L:
    case QGenKind::LInv: {
      std::vector<QGroupGen> w;
      for (int j = 1; j <= shape.m; ++j) w.emplace_back(g.kind, shape.linear(i, j), big);
      out.terms.push_back({1, std::move(w)});
      break;
    }
  }
  return out;
}

OperatorExpr realize(const UqElement& x) {
  OperatorExpr out(x.rank);
  for (const auto& t : x.terms) {
    OperatorExpr prod = OperatorExpr::identity(x.rank);
    for (const auto& g : t.word) prod = prod * phi_q(x.rank, g);
    out += t.coeff * prod;
  }
  return out;
}

OperatorExpr lambda_q(const GridShape& shape, const QGroupGen& g) {
  require_rank(g, shape.n, "lambda_q");
  const int big = shape.sites();
  const int i = g.index;
  OperatorExpr out(big);
  for (int j = 1; j <= shape.m; ++j) {
    const int a = shape.linear(i, j);
    switch (g.kind) {
      case QGenKind::E:
        out.add_term(QLaurent::q(-1),
                     concat({omega_inv(a), psid(a), psi(a + 1)},
                            KappaFactor{shape, Orientation::RowAfter, i, j}.omega_word()));
        break;
      case QGenKind::F:
        out.add_term(1, concat(concat({omega(a)},
                                      KappaFactor{shape, Orientation::RowBefore, i, j, true}
                                          .omega_word()),
                               {psid(a + 1), psi(a)}));
        break;
      default:
        break;
    }
  }
  if (g.kind == QGenKind::E || g.kind == QGenKind::F) return out;
  Word w;
  for (int j = 1; j <= shape.m; ++j) {
    const int a = shape.linear(i, j);
    switch (g.kind) {
      case QGenKind::K:
        w.push_back(omega_inv(a));
        w.push_back(omega(a + 1));
        break;
      case QGenKind::KInv:
        w.push_back(omega(a));
        w.push_back(omega_inv(a + 1));
        break;
      case QGenKind::L:
        w.push_back(omega_inv(a));
        break;
      case QGenKind::LInv:
        w.push_back(omega(a));
        break;
      default:
        break;
    }
  }
  return OperatorExpr::monomial(big, std::move(w));
}

OperatorExpr rho_q(const GridShape& shape, const QGroupGen& g) {
  require_rank(g, shape.m, "rho_q");
  const int big = shape.sites();
  const int n = shape.n;
  const int j = g.index;
  OperatorExpr out(big);
  if (g.kind == QGenKind::E || g.kind == QGenKind::F) {
    for (int i = 1; i <= n; ++i) {
      const int a = i + (j - 1) * n;
      const int b = i + j * n;
      if (g.kind == QGenKind::E) {
        out.add_term(1, concat(KappaFactor{shape, Orientation::ColumnAbove, i, j}.omega_word(),
                               {psid(a), psi(b)}));
      } else {
        out.add_term(1, concat({psid(b), psi(a)},
                               KappaFactor{shape, Orientation::ColumnBelow, i, j, true}
                                   .omega_word()));
      }
    }
    return out;
  }
  Word w;
  for (int i = 1; i <= n; ++i) {
    const int a = i + (j - 1) * n;
    switch (g.kind) {
      case QGenKind::K:
        w.push_back(omega_inv(a));
        w.push_back(omega(a + n));
        break;
      case QGenKind::KInv:
        w.push_back(omega(a));
        w.push_back(omega_inv(a + n));
        break;
      case QGenKind::L:
        w.push_back(omega_inv(a));
        break;
      case QGenKind::LInv:
        w.push_back(omega(a));
        break;
      default:
        break;
    }
  }
  return OperatorExpr::monomial(big, std::move(w));
}

Representation lambda_q_rep(const GridShape& shape, int cap) {
  return build_rep(shape.n, shape.sites(), cap,
                   [&shape](const QGroupGen& g) { return lambda_q(shape, g); });
}

Representation rho_q_rep(const GridShape& shape, int cap) {
  return build_rep(shape.m, shape.sites(), cap,
                   [&shape](const QGroupGen& g) { return rho_q(shape, g); });
}

OperatorExpr classical_lambda(const GridShape& shape, const QGroupGen& g) {
  require_rank(g, shape.n, "classical_lambda");
  const int i = g.index;
  OperatorExpr out(shape.sites(), Flavor::Classical);
  for (int j = 1; j <= shape.m; ++j) {
    const int a = shape.linear(i, j);
    switch (g.kind) {
      case QGenKind::E:
        out.add_term(1, {psid(a), psi(a + 1)});
        break;
      case QGenKind::F:
        out.add_term(1, {psid(a + 1), psi(a)});
        break;
      case QGenKind::L:
        out.add_term(1, {psid(a), psi(a)});
        break;
      default:
        throw std::invalid_argument("classical maps take E, F or L-bar");
    }
  }
  return out;
}

OperatorExpr classical_rho(const GridShape& shape, const QGroupGen& g) {
  require_rank(g, shape.m, "classical_rho");
  const int j = g.index;
  const int n = shape.n;
  OperatorExpr out(shape.sites(), Flavor::Classical);
  for (int i = 1; i <= n; ++i) {
    const int a = i + (j - 1) * n;
    switch (g.kind) {
      case QGenKind::E:
        out.add_term(1, {psid(a), psi(a + n)});
        break;
      case QGenKind::F:
        out.add_term(1, {psid(a + n), psi(a)});
        break;
      case QGenKind::L:
        out.add_term(1, {psid(a), psi(a)});
        break;
      default:
        throw std::invalid_argument("classical maps take E, F or L-bar");
    }
  }
  return out;
}

ClassicalRep classical_lambda_rep(const GridShape& shape, int cap) {
  return build_classical(shape.n, shape.sites(), cap,
                         [&shape](const QGroupGen& g) { return classical_lambda(shape, g); });
}

ClassicalRep classical_rho_rep(const GridShape& shape, int cap) {
  return build_classical(shape.m, shape.sites(), cap,
                         [&shape](const QGroupGen& g) { return classical_rho(shape, g); });
}

Report check_classical_relations(const ClassicalRep& rep, const std::string& name) {
  Report report(name);
  const int p = rep.rank;
  const std::size_t dim = rep.lbar.at(0).dim();
  const QMatrix zero(dim);
  auto E = [&](int i) -> const QMatrix& { return rep.e[static_cast<std::size_t>(i - 1)]; };
  auto F = [&](int i) -> const QMatrix& { return rep.f[static_cast<std::size_t>(i - 1)]; };
  auto Lb = [&](int i) -> const QMatrix& { return rep.lbar[static_cast<std::size_t>(i - 1)]; };
  auto cmp = [&](const std::string& rel, std::vector<int> idx, const QMatrix& a, const QMatrix& b) {
    report.add(compare_any(rel, std::move(idx), a, b, rep.state_length));
  };
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) cmp("Lbar_Lbar_commute", {i, j}, commutator(Lb(i), Lb(j)), zero);
    for (int j = 1; j < p; ++j) {
      const long a = weight_pairing(i, j);
      cmp("Lbar_E_bracket", {i, j}, commutator(Lb(i), E(j)), QLaurent(a) * E(j));
      cmp("Lbar_F_bracket", {i, j}, commutator(Lb(i), F(j)), QLaurent(-a) * F(j));
    }
  }
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      const QMatrix rhs = i == j ? Lb(i) - Lb(i + 1) : zero;
      cmp("E_F_bracket", {i, j}, commutator(E(i), F(j)), rhs);
      if (i == j) continue;
      for (bool raise : {true, false}) {
        const QMatrix& xi = raise ? E(i) : F(i);
        const QMatrix& xj = raise ? E(j) : F(j);
        const std::string x = raise ? "E" : "F";
        if (std::abs(i - j) > 1) {
          if (i < j) cmp("serre_commute_" + x, {i, j}, commutator(xi, xj), zero);
        } else {
          cmp("serre_" + x, {i, j}, commutator(xi, commutator(xi, xj)), zero);
        }
      }
    }
  }
  return report;
}

RMatrix matrix_unit(int dim, int a, int b) {
  if (a < 1 || b < 1 || a > dim || b > dim) throw std::out_of_range("matrix unit index");
  RMatrix m(static_cast<std::size_t>(dim));
  m.set_column(static_cast<std::size_t>(b - 1), {{static_cast<std::size_t>(a - 1), Rational(1)}});
  return m;
}

RMatrix nested_root_vector(int dim, int a, int b) {
  if (a == b) throw std::invalid_argument("nested root vector needs a != b");
  const int step = a < b ? 1 : -1;
  RMatrix x = matrix_unit(dim, a, a + step);
  for (int c = a + step; c != b; c += step) {
    const RMatrix y = matrix_unit(dim, c, c + step);
    x = x * y - y * x;
  }
  return x;
}

RMatrix classical_nested_root_vector(const GridShape& shape, int j, bool raise) {
  if (j < 1 || j >= shape.m) throw std::out_of_range("column index outside 1..m-1");
  const int big = shape.sites();
  RMatrix out(static_cast<std::size_t>(big));
  for (int i = 1; i <= shape.n; ++i) {
    const int a = i + (j - 1) * shape.n;
    const int b = i + j * shape.n;
    out += raise ? nested_root_vector(big, a, b) : nested_root_vector(big, b, a);
  }
  return out;
}

RMatrix dequantize(const QMatrix& m) { return specialize(m, Rational(1)); }

RMatrix dequantize_cartan(const QMatrix& l, const QMatrix& linv) {
  const QLaurent q_diff = QLaurent::q(1) - QLaurent::q(-1);
  return (l - linv).map([&](const QLaurent& p) { return specialize(exact_div(p, q_diff), 1); });
}

Report check_theta_composition(const GridShape& shape, int cap) {
  Report report("theta_composition");
  const Representation lam = lambda_q_rep(shape, cap);
  for (const auto& g : all_generators(shape.n)) {
    const QMatrix lhs = to_matrix(realize(theta(shape, g)), cap);
    report.add(compare_any("Phi_nm(Theta(" + to_string(g) + ")) = lambda_q", {g.index}, lhs,
                           lam(g), shape.sites()));
  }
  return report;
}

Report check_commutant(const GridShape& shape, Flavor flavor, int cap) {
  Report report(flavor == Flavor::Quantum ? "commutant_quantum" : "commutant_classical");
  std::vector<std::pair<std::string, QMatrix>> left, right;
  if (flavor == Flavor::Quantum) {
    for (const auto& g : all_generators(shape.n)) {
      left.emplace_back(gen_name("lambda_q", g), to_matrix(lambda_q(shape, g), cap));
    }
    for (const auto& g : all_generators(shape.m)) {
      right.emplace_back(gen_name("rho_q", g), to_matrix(rho_q(shape, g), cap));
    }
  } else {
    for (QGenKind k : {QGenKind::E, QGenKind::F, QGenKind::L}) {
      const int top_n = k == QGenKind::L ? shape.n : shape.n - 1;
      const int top_m = k == QGenKind::L ? shape.m : shape.m - 1;
      for (int i = 1; i <= top_n; ++i) {
        QGroupGen g(k, i, shape.n);
        left.emplace_back(gen_name("lambda", g), to_matrix(classical_lambda(shape, g), cap));
      }
      for (int j = 1; j <= top_m; ++j) {
        QGroupGen g(k, j, shape.m);
        right.emplace_back(gen_name("rho", g), to_matrix(classical_rho(shape, g), cap));
      }
    }
  }
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size(); ++b) {
      const QMatrix& x = left[a].second;
      const QMatrix& y = right[b].second;
      report.add(compare_any("[" + left[a].first + ", " + right[b].first + "] = 0",
                             {static_cast<int>(a) + 1, static_cast<int>(b) + 1}, x * y, y * x,
                             shape.sites()));
    }
  }
  return report;
}

Report check_dequantization(const GridShape& shape, int cap) {
  Report report("dequantization");
  const int big = shape.sites();
  const RMatrix id = RMatrix::identity(std::size_t{1} << big);
  struct Side {
    const char* name;
    int rank;
    Representation quantum;
    ClassicalRep classical;
  };
  std::vector<Side> sides;
  sides.push_back({"lambda", shape.n, lambda_q_rep(shape, cap), classical_lambda_rep(shape, cap)});
  sides.push_back({"rho", shape.m, rho_q_rep(shape, cap), classical_rho_rep(shape, cap)});
  for (const auto& s : sides) {
    const std::string nm = s.name;
    for (int i = 1; i < s.rank; ++i) {
      const auto k = static_cast<std::size_t>(i - 1);
      report.add(compare_any(nm + "_q(E) at q=1", {i}, dequantize(s.quantum.E(i)),
                             to_rational(s.classical.e[k]), big));
      report.add(compare_any(nm + "_q(F) at q=1", {i}, dequantize(s.quantum.F(i)),
                             to_rational(s.classical.f[k]), big));
    }
    for (int i = 1; i <= s.rank; ++i) {
      const auto k = static_cast<std::size_t>(i - 1);
      report.add(compare_any(nm + "_q(L) at q=1", {i}, dequantize(s.quantum.L(i)), id, big));
      bool divisible = true;
      RMatrix cartan;
      try {
        cartan = dequantize_cartan(s.quantum.L(i), s.quantum.LInv(i));
      } catch (const NonExactDivision&) {
        divisible = false;
      }
      if (!divisible) {
        report.add(nm + "_q(L) Cartan limit", {i}, false, std::nullopt,
                   "L - L^-1 not divisible by q - q^-1");
      } else {
        report.add(compare_any(nm + "_q(L) Cartan limit", {i}, cartan,
                               to_rational(s.classical.lbar[k]), big));
      }
    }
  }
  return report;
}

Report check_nested_root_vectors(const GridShape& shape, int cap) {
  Report report("nested_root_vectors");
  const int big = shape.sites();
  for (int j = 1; j < shape.m; ++j) {
    for (bool raise : {true, false}) {
      const std::string x = raise ? "E" : "F";
      const RMatrix nested = classical_nested_root_vector(shape, j, raise);
      RMatrix units(static_cast<std::size_t>(big));
      for (int i = 1; i <= shape.n; ++i) {
        const int a = i + (j - 1) * shape.n;
        const int b = i + j * shape.n;
        units += raise ? matrix_unit(big, a, b) : matrix_unit(big, b, a);
      }
      report.add(compare_any("nested_" + x + " = matrix units", {j}, nested, units, 0));

      // M_ab -> psid_a psi_b, then compare with the Clifford-side map
      OperatorExpr image(big, Flavor::Classical);
      for (std::size_t col = 0; col < nested.dim(); ++col) {
        for (const auto& e : nested.column(col)) {
          image.add_term(QLaurent(e.value), {psid(static_cast<int>(e.row) + 1),
                                              psi(static_cast<int>(col) + 1)});
        }
      }
      const QGroupGen g(raise ? QGenKind::E : QGenKind::F, j, shape.m);
      report.add(compare_any("Phi_nm(nested_" + x + ") = rho", {j}, to_matrix(image, cap),
                             to_matrix(classical_rho(shape, g), cap), big));

      // the same nested commutator evaluated among Clifford operators
      const int a0 = raise ? 1 + (j - 1) * shape.n : 1 + j * shape.n;
      QMatrix acc(std::size_t{1} << big);
      for (int i = 1; i <= shape.n; ++i) {
        const int a = a0 + (i - 1);
        const int b = raise ? a + shape.n : a - shape.n;
        const int step = raise ? 1 : -1;
        auto simple = [&](int c) {
          return to_matrix(OperatorExpr::monomial(big, {psid(c), psi(c + step)}, 1,
                                                  Flavor::Classical),
                           cap);
        };
        QMatrix xm = simple(a);
        for (int c = a + step; c != b; c += step) {
          const QMatrix y = simple(c);
          xm = xm * y - y * xm;
        }
        acc += xm;
      }
      report.add(compare_any("nested Clifford commutator " + x + " = rho", {j}, acc,
                             to_matrix(classical_rho(shape, g), cap), big));
    }
  }
  return report;
}

std::vector<std::vector<int>> weight_multiset(const Representation& rep) {
  std::vector<std::vector<int>> out;
  out.reserve(rep.dim());
  for (std::size_t c = 0; c < rep.dim(); ++c) {
    std::vector<int> w;
    for (int i = 1; i <= rep.rank(); ++i) {
      const auto& col = rep.L(i).column(c);
      if (col.size() != 1 || col[0].row != c || !col[0].value.is_monomial() ||
          col[0].value.terms()[0].second != 1) {
        throw std::invalid_argument("L_" + std::to_string(i) + " is not diagonal in q-powers");
      }
      w.push_back(col[0].value.terms()[0].first);
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report check_tensor_power(const GridShape& shape, int cap) {
  Report report("tensor_power");
  const Representation lam = lambda_q_rep(shape, cap);
  const std::vector<Representation> factors(static_cast<std::size_t>(shape.m),
                                            phi_q_rep(shape.n, cap));
  const Representation tp = coproduct_rep(factors, Coproduct::Standard);
  report.add("weight_multiset", {shape.n, shape.m}, weight_multiset(lam) == weight_multiset(tp));
  for (const auto& g : all_generators(shape.n)) {
    report.add(compare_any("lambda_q = Delta^(m-1) Phi_q,n", {g.index}, lam(g), tp(g),
                           shape.sites()));
  }
  return report;
}

std::vector<std::string> explain(EmbeddingMap map, const GridShape& shape, const QGroupGen& g) {
  std::vector<std::string> out;
  auto expr_terms = [&out](const OperatorExpr& op) {
    for (const auto& t : op.terms()) {
      std::string c = t.coeff == QLaurent(1) ? "" : t.coeff.to_string() + " ";
      out.push_back(c + word_text(t.word));
    }
  };
  switch (map) {
    case EmbeddingMap::Phi:
      expr_terms(phi_q(g.rank, g));
      break;
    case EmbeddingMap::Theta:
      for (const auto& t : theta(shape, g).terms) out.push_back(UqElement{shape.sites(), {t}}.to_string());
      break;
    case EmbeddingMap::Lambda:
      if (g.kind == QGenKind::E || g.kind == QGenKind::F) {
        const bool raise = g.kind == QGenKind::E;
        for (int j = 1; j <= shape.m; ++j) {
          const int a = shape.linear(g.index, j);
          KappaFactor k{shape, raise ? Orientation::RowAfter : Orientation::RowBefore, g.index, j,
                        !raise};
          const std::string core = raise ? "q^-1 w" + std::to_string(a) + "^-1 psid" +
                                               std::to_string(a) + " psi" + std::to_string(a + 1)
                                         : "w" + std::to_string(a);
          const std::string tail = raise ? "" : " psid" + std::to_string(a + 1) + " psi" +
                                                    std::to_string(a);
          std::string line = raise ? core + " " + k.to_string() : core + " " + k.to_string() + tail;
          line += "   [" + k.to_string() + " = " + word_text(k.omega_word()) + "]";
          out.push_back(line);
        }
      } else {
        expr_terms(lambda_q(shape, g));
      }
      break;
    case EmbeddingMap::Rho:
      if (g.kind == QGenKind::E || g.kind == QGenKind::F) {
        const bool raise = g.kind == QGenKind::E;
        for (int i = 1; i <= shape.n; ++i) {
          const int a = i + (g.index - 1) * shape.n;
          const int b = a + shape.n;
          KappaFactor k{shape, raise ? Orientation::ColumnAbove : Orientation::ColumnBelow, i,
                        g.index, !raise};
          std::string line =
              raise ? k.to_string() + " psid" + std::to_string(a) + " psi" + std::to_string(b)
                    : "psid" + std::to_string(b) + " psi" + std::to_string(a) + " " + k.to_string();
          line += "   [" + k.to_string() + " = " + word_text(k.omega_word()) + "]";
          out.push_back(line);
        }
      } else {
        expr_terms(rho_q(shape, g));
      }
      break;
    case EmbeddingMap::ClassicalLambda:
      expr_terms(classical_lambda(shape, g));
      break;
    case EmbeddingMap::ClassicalRho:
      expr_terms(classical_rho(shape, g));
      break;
  }
  return out;
}

}  // namespace qhowe
