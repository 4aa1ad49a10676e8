// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/qclifford.hpp"

#include <stdexcept>

namespace qhowe {

std::string to_string(const CliffordGen& g) {
  const std::string k = std::to_string(g.index);
  switch (g.kind) {
    case CliffordKind::Annihilate:
      return "psi" + k;
    case CliffordKind::Create:
      return "psid" + k;
    case CliffordKind::Omega:
      return "w" + k;
    case CliffordKind::OmegaInv:
      return "w" + k + "^-1";
  }
  return "?";
}

OperatorExpr::OperatorExpr(int length, Flavor flavor) : length_(length), flavor_(flavor) {
  if (length < 0 || length > kMaxSites) throw std::invalid_argument("bad operator length");
}

OperatorExpr OperatorExpr::identity(int length, Flavor flavor) {
  return monomial(length, {}, 1, flavor);
}

OperatorExpr OperatorExpr::monomial(int length, Word word, const QLaurent& coeff,
                                    Flavor flavor) {
  OperatorExpr op(length, flavor);
  op.add_term(coeff, std::move(word));
  return op;
}

void OperatorExpr::add_term(const QLaurent& coeff, Word word) {
  for (const auto& g : word) {
    if (g.index < 1 || g.index > length_) {
      throw std::invalid_argument("generator " + qhowe::to_string(g) + " outside 1.." +
                                  std::to_string(length_));
    }
    if (flavor_ == Flavor::Classical &&
        (g.kind == CliffordKind::Omega || g.kind == CliffordKind::OmegaInv)) {
      throw std::invalid_argument("omega in a classical operator");
    }
  }
  QLaurent c = flavor_ == Flavor::Classical ? QLaurent(specialize(coeff, 1)) : coeff;
  if (c.is_zero()) return;
  terms_.push_back({std::move(c), std::move(word)});
}

void OperatorExpr::check_compatible(const OperatorExpr& o) const {
  if (o.length_ != length_) throw std::invalid_argument("operator length mismatch");
  if (o.flavor_ != flavor_) throw std::invalid_argument("mixing classical and quantum");
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  check_compatible(o);
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  check_compatible(o);
  for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.word});
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const QLaurent& c) {
  QLaurent s = flavor_ == Flavor::Classical ? QLaurent(specialize(c, 1)) : c;
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  a.check_compatible(b);
  OperatorExpr out(a.length_, a.flavor_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      out.terms_.push_back({ta.coeff * tb.coeff, std::move(w)});
    }
  }
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (const auto& g : t.word) {
      if (!word.empty()) word += " ";
      word += qhowe::to_string(g);
    }
    if (word.empty()) word = "1";
    if (t.coeff == QLaurent(1)) {
      out += word;
    } else if (t.coeff.is_monomial() && t.coeff.terms()[0].second == 1) {
      out += t.coeff.to_string() + " " + word;
    } else {
      out += "(" + t.coeff.to_string() + ") " + word;
    }
  }
  return out;
}

std::optional<WordImage> act(const Word& word, const BasisState& s) {
  WordImage img{1, 0, s};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int k = it->index;
    const bool occ = img.state.occupied(k);
    switch (it->kind) {
      case CliffordKind::Annihilate:
        if (!occ) return std::nullopt;
        if (prefix_parity(img.state, k) & 1) img.sign = -img.sign;
        img.state = img.state.with_vacant(k);
        break;
      case CliffordKind::Create:
        if (occ) return std::nullopt;
        if (prefix_parity(img.state, k) & 1) img.sign = -img.sign;
        img.state = img.state.with_occupied(k);
        break;
      case CliffordKind::Omega:
        if (occ) --img.q_exponent;
        break;
      case CliffordKind::OmegaInv:
        if (occ) ++img.q_exponent;
        break;
    }
  }
  return img;
}

QVector apply(const OperatorExpr& op, const BasisState& s) {
  if (s.length() != op.length()) throw std::invalid_argument("state length mismatch");
  QVector out(op.length());
  for (const auto& t : op.terms()) {
    auto img = act(t.word, s);
    if (!img) continue;
    out.add(img->state, t.coeff.shifted(img->q_exponent) * QLaurent(img->sign));
  }
  return out;
}

QVector apply(const OperatorExpr& op, const QVector& v) {
  if (v.length() != op.length()) throw std::invalid_argument("vector length mismatch");
  QVector out(op.length());
  for (const auto& [bits, c] : v.entries()) {
    out += c * apply(op, BasisState(op.length(), bits));
  }
  return out;
}

QMatrix to_matrix(const OperatorExpr& op, int cap) {
  if (op.length() > cap) {
    throw CapExceeded("matrix form needs N <= " + std::to_string(cap) + ", got N = " +
                      std::to_string(op.length()));
  }
  const std::size_t dim = std::size_t{1} << op.length();
  QMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const BasisState s(op.length(), j);
    QMatrix::Column col;
    for (const auto& t : op.terms()) {
      auto img = act(t.word, s);
      if (!img) continue;
      QLaurent c = t.coeff.shifted(img->q_exponent);
      if (img->sign < 0) c = -c;
      col.push_back({static_cast<std::size_t>(img->state.bits()), std::move(c)});
    }
    m.set_column(j, std::move(col));
  }
  return m;
}

OperatorExpr q_commutator(const OperatorExpr& a, const OperatorExpr& b, int k) {
  return a * b - QLaurent::q(k) * (b * a);
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
  return a * b + b * a;
}

Report check_clifford_relations(int sites, int cap) {
  if (sites < 1) throw std::invalid_argument("need at least one site");
  Report report("clifford");
  const int n = sites;
  auto mono = [n](Word w, Flavor f = Flavor::Quantum) {
    return OperatorExpr::monomial(n, std::move(w), 1, f);
  };
  auto check = [&](std::string rel, std::vector<int> idx, const OperatorExpr& lhs,
                   const OperatorExpr& rhs) {
    const QMatrix a = to_matrix(lhs, cap);
    const QMatrix b = to_matrix(rhs, cap);
    std::optional<std::string> witness;
    if (auto col = a.first_difference(b)) witness = BasisState(n, *col).to_string();
    report.add(std::move(rel), std::move(idx), !witness, witness);
  };
  const OperatorExpr zero(n);
  const OperatorExpr one = OperatorExpr::identity(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      check("psi_psi_anticommute", {i, j}, anticommutator(mono({psi(i)}), mono({psi(j)})), zero);
      check("psid_psid_anticommute", {i, j}, anticommutator(mono({psid(i)}), mono({psid(j)})),
            zero);
      check("psi_psid_anticommute", {i, j}, anticommutator(mono({psi(i)}), mono({psid(j)})),
            i == j ? one : zero);
    }
    const OperatorExpr a = mono({psi(i), psid(i)});
    const OperatorExpr b = mono({psid(i), psi(i)});
    check("psi_psid_plus_q_psid_psi", {i}, a + QLaurent::q(1) * b, mono({omega_inv(i)}));
    check("psi_psid_plus_qinv_psid_psi", {i}, a + QLaurent::q(-1) * b, mono({omega(i)}));
  }
  for (int i = 1; i + 2 <= n; ++i) {
    check("raising_q_commutator", {i},
          q_commutator(mono({psid(i), psi(i + 1)}), mono({psid(i + 1), psi(i + 2)}), 1),
          mono({omega_inv(i + 1), psid(i), psi(i + 2)}));
  }
  // classical operators against hand-evaluated signs (-1)^{l_1+...+l_{k-1}}
  for (int k = 1; k <= n; ++k) {
    for (const bool create : {false, true}) {
      const OperatorExpr op = mono({create ? psid(k) : psi(k)}, Flavor::Classical);
      std::optional<std::string> witness;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && !witness; ++bits) {
        const BasisState s(n, bits);
        QVector want(n);
        if (s.occupied(k) != create) {
          const BasisState t = create ? s.with_occupied(k) : s.with_vacant(k);
          want.add(t, prefix_parity(s, k) % 2 == 0 ? 1 : -1);
        }
        if (apply(op, s) != want) witness = s.to_string();
      }
      report.add(create ? "classical_psid_signs" : "classical_psi_signs", {k}, !witness, witness);
    }
  }
  return report;
}

}  // namespace qhowe
