// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/qgroup.hpp"

#include <cstdlib>
#include <stdexcept>

#include "qhowe/fockspace.hpp"

namespace qhowe {

namespace {

bool is_root_kind(QGenKind k) {
  return k == QGenKind::E || k == QGenKind::F || k == QGenKind::K || k == QGenKind::KInv;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix q_commutator(const QMatrix& a, const QMatrix& b, int k) {
  return a * b - QLaurent::q(k) * (b * a);
}

}  // namespace

QGroupGen::QGroupGen(QGenKind kind_, int index_, int rank_)
    : kind(kind_), index(index_), rank(rank_) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int top = is_root_kind(kind) ? rank - 1 : rank;
  if (index < 1 || index > top) {
    throw std::out_of_range("generator index " + std::to_string(index) + " outside 1.." +
                            std::to_string(top));
  }
}

std::string to_string(const QGroupGen& g) {
  const std::string i = std::to_string(g.index);
  switch (g.kind) {
    case QGenKind::E:
      return "E_" + i;
    case QGenKind::F:
      return "F_" + i;
    case QGenKind::K:
      return "K_" + i;
    case QGenKind::KInv:
      return "K_" + i + "^-1";
    case QGenKind::L:
      return "L_" + i;
    case QGenKind::LInv:
      return "L_" + i + "^-1";
  }
  return "?";
}

std::vector<QGroupGen> all_generators(int p) {
  std::vector<QGroupGen> out;
  for (QGenKind k : {QGenKind::E, QGenKind::F, QGenKind::K, QGenKind::KInv}) {
    for (int i = 1; i < p; ++i) out.emplace_back(k, i, p);
  }
  for (QGenKind k : {QGenKind::L, QGenKind::LInv}) {
    for (int i = 1; i <= p; ++i) out.emplace_back(k, i, p);
  }
  return out;
}

int CartanData::entry(int i, int j) const {
  if (i < 1 || j < 1 || i >= rank || j >= rank) throw std::out_of_range("Cartan index");
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

int weight_pairing(int i, int j) { return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0); }

std::optional<std::pair<QLaurent, int>> natural_action(const QGroupGen& g, int j) {
  if (j < 1 || j > g.rank) throw std::out_of_range("natural basis index");
  const int i = g.index;
  // K_i v_j = q^{delta_ij - delta_{i+1,j}} v_j
  const int k_exp = (i == j ? 1 : 0) - (i + 1 == j ? 1 : 0);
  switch (g.kind) {
    case QGenKind::E:
      if (j == i + 1) return std::pair{QLaurent(1), i};
      return std::nullopt;
    case QGenKind::F:
      if (j == i) return std::pair{QLaurent(1), i + 1};
      return std::nullopt;
    case QGenKind::K:
      return std::pair{QLaurent::q(k_exp), j};
    case QGenKind::KInv:
      return std::pair{QLaurent::q(-k_exp), j};
    case QGenKind::L:
      return std::pair{QLaurent::q(i == j ? 1 : 0), j};
    case QGenKind::LInv:
      return std::pair{QLaurent::q(i == j ? -1 : 0), j};
  }
  return std::nullopt;
}

Representation::Representation(int rank, std::vector<QMatrix> e, std::vector<QMatrix> f,
                               std::vector<QMatrix> l, std::vector<QMatrix> linv,
                               int state_length)
    : rank_(rank),
      dim_(0),
      state_length_(state_length),
      e_(std::move(e)),
      f_(std::move(f)),
      l_(std::move(l)),
      linv_(std::move(linv)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const auto r = static_cast<std::size_t>(rank);
  if (e_.size() != r - 1 || f_.size() != r - 1 || l_.size() != r || linv_.size() != r) {
    throw std::invalid_argument("wrong number of generator matrices");
  }
  dim_ = l_[0].dim();
  for (const auto* v : {&e_, &f_, &l_, &linv_}) {
    for (const auto& mat : *v) {
      if (mat.dim() != dim_) throw std::invalid_argument("generator dimension mismatch");
    }
  }
  for (std::size_t i = 0; i + 1 < r; ++i) {
    k_.push_back(l_[i] * linv_[i + 1]);
    kinv_.push_back(linv_[i] * l_[i + 1]);
  }
}

void Representation::check_root(int i) const {
  if (i < 1 || i >= rank_) throw std::out_of_range("root index outside 1..rank-1");
}

void Representation::check_weight(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("weight index outside 1..rank");
}

const QMatrix& Representation::E(int i) const {
  check_root(i);
  return e_[static_cast<std::size_t>(i - 1)];
}
const QMatrix& Representation::F(int i) const {
  check_root(i);
  return f_[static_cast<std::size_t>(i - 1)];
}
const QMatrix& Representation::K(int i) const {
  check_root(i);
  return k_[static_cast<std::size_t>(i - 1)];
}
const QMatrix& Representation::KInv(int i) const {
  check_root(i);
  return kinv_[static_cast<std::size_t>(i - 1)];
}
const QMatrix& Representation::L(int i) const {
  check_weight(i);
  return l_[static_cast<std::size_t>(i - 1)];
}
const QMatrix& Representation::LInv(int i) const {
  check_weight(i);
  return linv_[static_cast<std::size_t>(i - 1)];
}

const QMatrix& Representation::operator()(const QGroupGen& g) const {
  if (g.rank != rank_) throw std::invalid_argument("generator rank mismatch");
  switch (g.kind) {
    case QGenKind::E:
      return E(g.index);
    case QGenKind::F:
      return F(g.index);
    case QGenKind::K:
      return K(g.index);
    case QGenKind::KInv:
      return KInv(g.index);
    case QGenKind::L:
      return L(g.index);
    case QGenKind::LInv:
      return LInv(g.index);
  }
  throw std::logic_error("unknown generator kind");
}

std::string Representation::basis_label(std::size_t j) const {
  if (state_length_ > 0) return BasisState(state_length_, j).to_string();
  return "e" + std::to_string(j + 1);
}

Representation natural_rep(int p) {
  if (p < 1) throw std::invalid_argument("rank must be positive");
  const auto dim = static_cast<std::size_t>(p);
  auto build = [&](QGenKind kind, int i) {
    QMatrix m(dim);
    QGroupGen g(kind, i, p);
    for (int j = 1; j <= p; ++j) {
      if (auto img = natural_action(g, j)) {
        m.set_column(static_cast<std::size_t>(j - 1),
                     {{static_cast<std::size_t>(img->second - 1), img->first}});
      }
    }
    return m;
  };
  std::vector<QMatrix> e, f, l, linv;
  for (int i = 1; i < p; ++i) {
    e.push_back(build(QGenKind::E, i));
    f.push_back(build(QGenKind::F, i));
  }
  for (int i = 1; i <= p; ++i) {
    l.push_back(build(QGenKind::L, i));
    linv.push_back(build(QGenKind::LInv, i));
  }
  return {p, std::move(e), std::move(f), std::move(l), std::move(linv)};
}

CheckResult compare_matrices(std::string relation, std::vector<int> indices,
                             const QMatrix& lhs, const QMatrix& rhs,
                             const BasisLabeler& label) {
  CheckResult r{std::move(relation), std::move(indices), true, std::nullopt, {}};
  if (auto col = lhs.first_difference(rhs)) {
    r.pass = false;
    r.witness = label ? label(*col) : std::to_string(*col);
  }
  return r;
}

Report check_relations(const Representation& rep, const std::string& name) {
  Report report(name);
  const int p = rep.rank();
  const CartanData cartan{p};
  const QMatrix id = QMatrix::identity(rep.dim());
  const BasisLabeler label = [&rep](std::size_t j) { return rep.basis_label(j); };
  auto cmp = [&](const char* rel, std::vector<int> idx, const QMatrix& a, const QMatrix& b) {
    report.add(compare_matrices(rel, std::move(idx), a, b, label));
  };

  for (int i = 1; i <= p; ++i) {
    cmp("L_L_inverse", {i}, rep.L(i) * rep.LInv(i), id);
    cmp("L_inverse_L", {i}, rep.LInv(i) * rep.L(i), id);
    for (int j = i + 1; j <= p; ++j) cmp("L_L_commute", {i, j}, rep.L(i) * rep.L(j), rep.L(j) * rep.L(i));
  }
  for (int i = 1; i < p; ++i) {
    cmp("K_K_inverse", {i}, rep.K(i) * rep.KInv(i), id);
    for (int j = i + 1; j < p; ++j) cmp("K_K_commute", {i, j}, rep.K(i) * rep.K(j), rep.K(j) * rep.K(i));
  }
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      const int a = cartan.entry(i, j);
      cmp("K_E_conjugation", {i, j}, rep.K(i) * rep.E(j) * rep.KInv(i), QLaurent::q(a) * rep.E(j));
      cmp("K_F_conjugation", {i, j}, rep.K(i) * rep.F(j) * rep.KInv(i), QLaurent::q(-a) * rep.F(j));
    }
  }
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j < p; ++j) {
      const int a = weight_pairing(i, j);
      cmp("L_E_conjugation", {i, j}, rep.L(i) * rep.E(j) * rep.LInv(i), QLaurent::q(a) * rep.E(j));
      cmp("L_F_conjugation", {i, j}, rep.L(i) * rep.F(j) * rep.LInv(i), QLaurent::q(-a) * rep.F(j));
    }
  }
  const QLaurent q_diff = QLaurent::q(1) - QLaurent::q(-1);
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      const QMatrix lhs = commutator(rep.E(i), rep.F(j));
      if (i != j) {
        cmp("E_F_commutator", {i, j}, lhs, QMatrix(rep.dim()));
        continue;
      }
      const QMatrix diff = rep.K(i) - rep.KInv(i);
      std::optional<std::size_t> bad_column;
      QMatrix rhs(rep.dim());
      for (std::size_t c = 0; c < rep.dim() && !bad_column; ++c) {
        QMatrix::Column col;
        for (const auto& e : diff.column(c)) {
          try {
            col.push_back({e.row, exact_div(e.value, q_diff)});
          } catch (const NonExactDivision&) {
            bad_column = c;
            break;
          }
        }
        rhs.set_column(c, std::move(col));
      }
      if (bad_column) {
        report.add("E_F_commutator", {i, j}, false, rep.basis_label(*bad_column),
                   "K - K^-1 not divisible by q - q^-1");
      } else {
        cmp("E_F_commutator", {i, j}, lhs, rhs);
      }
    }
  }
  return report;
}

Report check_serre(const Representation& rep, const std::string& name) {
  Report report(name);
  const int p = rep.rank();
  const QMatrix zero(rep.dim());
  const BasisLabeler label = [&rep](std::size_t j) { return rep.basis_label(j); };
  const QLaurent two = q_int(2);
  for (QGenKind kind : {QGenKind::E, QGenKind::F}) {
    const std::string x = kind == QGenKind::E ? "E" : "F";
    auto gen = [&](int i) -> const QMatrix& { return kind == QGenKind::E ? rep.E(i) : rep.F(i); };
    for (int i = 1; i < p; ++i) {
      for (int j = 1; j < p; ++j) {
        if (i == j) continue;
        const QMatrix& xi = gen(i);
        const QMatrix& xj = gen(j);
        if (std::abs(i - j) > 1) {
          if (i < j) report.add(compare_matrices("serre_commute_" + x, {i, j}, commutator(xi, xj), zero, label));
          continue;
        }
        const QMatrix xi2 = xi * xi;
        const QMatrix sum = xj * xi2 - two * (xi * xj * xi) + xi2 * xj;
        report.add(compare_matrices("serre_binomial_" + x, {i, j}, sum, zero, label));
        const QMatrix nested = q_commutator(xi, q_commutator(xi, xj, 1), -1);
        report.add(compare_matrices("serre_nested_" + x, {i, j}, nested, zero, label));
      }
    }
  }
  return report;
}

namespace {

Representation tensor_pair(const Representation& a, const Representation& b,
                           Coproduct convention) {
  if (a.rank() != b.rank()) throw std::invalid_argument("coproduct of different ranks");
  const int p = a.rank();
  const QMatrix ia = QMatrix::identity(a.dim());
  const QMatrix ib = QMatrix::identity(b.dim());
  std::vector<QMatrix> e, f, l, linv;
  for (int i = 1; i < p; ++i) {
    if (convention == Coproduct::Standard) {
      e.push_back(kron(a.E(i), b.K(i)) + kron(ia, b.E(i)));
      f.push_back(kron(a.F(i), ib) + kron(a.KInv(i), b.F(i)));
    } else {
      e.push_back(kron(a.E(i), ib) + kron(a.K(i), b.E(i)));
      f.push_back(kron(a.F(i), b.KInv(i)) + kron(ia, b.F(i)));
    }
  }
  for (int i = 1; i <= p; ++i) {
    l.push_back(kron(a.L(i), b.L(i)));
    linv.push_back(kron(a.LInv(i), b.LInv(i)));
  }
  const int bits = a.state_length() > 0 && b.state_length() > 0
                       ? a.state_length() + b.state_length()
                       : 0;
  return {p, std::move(e), std::move(f), std::move(l), std::move(linv), bits};
}

}  // namespace

Representation coproduct_rep(const std::vector<Representation>& factors, Coproduct convention) {
  if (factors.empty()) throw std::invalid_argument("coproduct of no factors");
  Representation acc = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = tensor_pair(acc, factors[k], convention);
  }
  return acc;
}

Report check_coassociativity(const Representation& a, const Representation& b,
                             const Representation& c, Coproduct convention) {
  Report report(convention == Coproduct::Standard ? "coassociativity_standard"
                                                  : "coassociativity_alternate");
  const Representation left = tensor_pair(tensor_pair(a, b, convention), c, convention);
  const Representation right = tensor_pair(a, tensor_pair(b, c, convention), convention);
  const BasisLabeler label = [&left](std::size_t j) { return left.basis_label(j); };
  for (const auto& g : all_generators(a.rank())) {
    report.add(compare_matrices("coassociative_" + to_string(g), {g.index}, left(g), right(g), label));
  }
  return report;
}

}  // namespace qhowe
