// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/braided_ext.hpp"

#include <stdexcept>

#include "qhowe/embeddings.hpp"

namespace qhowe {

namespace {

std::vector<int> letters_of(const BasisState& s) {
  std::vector<int> out;
  for (int k = 1; k <= s.length(); ++k) {
    if (s.occupied(k)) out.push_back(k);
  }
  return out;
}

// Sum of word images over the basis, each normalized into v(l) form.
void add_word(QVector& out, const QLaurent& coeff, const std::vector<int>& word, int n) {
  if (coeff.is_zero()) return;
  if (auto nf = normalize(word, n)) out.add(nf->state, coeff * nf->coeff);
}

}  // namespace

std::optional<NormalForm> normalize(const std::vector<int>& word, int n) {
  std::vector<int> sorted;
  sorted.reserve(word.size());
  int swaps = 0;
  for (int x : word) {
    if (x < 1 || x > n) throw std::out_of_range("letter outside 1..n");
    std::size_t pos = sorted.size();
    while (pos > 0 && sorted[pos - 1] > x) {
      --pos;
      ++swaps;
    }
    if (pos > 0 && sorted[pos - 1] == x) return std::nullopt;
    sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), x);
  }
  // each v_j v_i -> v_i v_j (i < j) contributes -q^-1
  QLaurent coeff = QLaurent::monomial(swaps % 2 == 0 ? 1 : -1, -swaps);
  std::uint64_t bits = 0;
  for (int x : sorted) bits |= std::uint64_t{1} << (x - 1);
  return NormalForm{std::move(coeff), BasisState(n, bits)};
}

QVector mul(const QVector& a, const QVector& b) {
  if (a.length() != b.length()) throw std::invalid_argument("length mismatch");
  const int n = a.length();
  QVector out(n);
  for (const auto& [ba, ca] : a.entries()) {
    std::vector<int> wa = letters_of(BasisState(n, ba));
    for (const auto& [bb, cb] : b.entries()) {
      std::vector<int> w = wa;
      for (int x : letters_of(BasisState(n, bb))) w.push_back(x);
      add_word(out, ca * cb, w, n);
    }
  }
  return out;
}

QVector iota_q(int i, const QVector& v) {
  QVector out(v.length());
  for (const auto& [bits, c] : v.entries()) {
    const BasisState s(v.length(), bits);
    if (!s.occupied(i)) continue;
    const int p = prefix_parity(s, i);
    out.add(s.with_vacant(i), c * QLaurent::monomial(p % 2 == 0 ? 1 : -1, p));
  }
  return out;
}

QVector eps_q(int i, const QVector& v) {
  QVector out(v.length());
  for (const auto& [bits, c] : v.entries()) {
    const BasisState s(v.length(), bits);
    if (s.occupied(i)) continue;
    const int p = prefix_parity(s, i);
    out.add(s.with_occupied(i), c * QLaurent::monomial(p % 2 == 0 ? 1 : -1, -p));
  }
  return out;
}

OperatorExpr iota_q_word(int i, int n) {
  Word w;
  for (int k = 1; k < i; ++k) w.push_back(omega_inv(k));
  w.push_back(psi(i));
  return OperatorExpr::monomial(n, std::move(w));
}

OperatorExpr eps_q_word(int i, int n) {
  Word w;
  for (int k = 1; k < i; ++k) w.push_back(omega(k));
  w.push_back(psid(i));
  return OperatorExpr::monomial(n, std::move(w));
}

QVector module_algebra_action(const QGroupGen& g, const QVector& v) {
  const int n = v.length();
  if (g.rank != n) throw std::invalid_argument("generator rank must equal algebra rank");
  QVector out(n);
  auto on_letter = [&](QGenKind kind, int letter) {
    return natural_action(QGroupGen(kind, g.index, n), letter);
  };
  for (const auto& [bits, c] : v.entries()) {
    const BasisState s(n, bits);
    const std::vector<int> letters = letters_of(s);
    const std::size_t d = letters.size();
    if (d == 0) {
      // counit: zero on E and F, one on the group-likes
      if (g.kind != QGenKind::E && g.kind != QGenKind::F) out.add(s, c);
      continue;
    }
    if (g.kind != QGenKind::E && g.kind != QGenKind::F) {
      QLaurent coeff = c;
      for (int x : letters) coeff *= on_letter(g.kind, x)->first;
      out.add(s, coeff);
      continue;
    }
    // E -> sum_k 1 (x) ... (x) E (x) K (x) ... (x) K
    // F -> sum_k K^-1 (x) ... (x) K^-1 (x) F (x) 1 (x) ... (x) 1
    const bool raise = g.kind == QGenKind::E;
    for (std::size_t k = 0; k < d; ++k) {
      auto img = on_letter(g.kind, letters[k]);
      if (!img) continue;
      QLaurent coeff = c * img->first;
      for (std::size_t t = 0; t < d; ++t) {
        if (raise && t > k) coeff *= on_letter(QGenKind::K, letters[t])->first;
        if (!raise && t < k) coeff *= on_letter(QGenKind::KInv, letters[t])->first;
      }
      std::vector<int> word = letters;
      word[k] = img->second;
      add_word(out, coeff, word, n);
    }
  }
  return out;
}

Report check_module_algebra(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  Report report("module_algebra");
  for (const auto& g : all_generators(n)) {
    const OperatorExpr op = phi_q(n, g);
    std::optional<std::string> witness;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && !witness; ++bits) {
      const BasisState s(n, bits);
      if (module_algebra_action(g, QVector::basis(s)) != apply(op, s)) witness = s.to_string();
    }
    report.add("action_equals_phi " + to_string(g), {g.index}, !witness, witness);
  }
  const auto label = [n](std::size_t j) { return BasisState(n, j).to_string(); };
  for (int i = 1; i < n; ++i) {
    report.add(compare_matrices("eps_iota_is_phi_E", {i},
                                to_matrix(eps_q_word(i, n) * iota_q_word(i + 1, n)),
                                to_matrix(phi_q(n, {QGenKind::E, i, n})), label));
    report.add(compare_matrices("eps_iota_is_phi_F", {i},
                                to_matrix(eps_q_word(i + 1, n) * iota_q_word(i, n)),
                                to_matrix(phi_q(n, {QGenKind::F, i, n})), label));
  }
  return report;
}

}  // namespace qhowe
