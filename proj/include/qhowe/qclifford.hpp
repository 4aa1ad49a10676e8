// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Operators on the exterior algebra built from psi_k (annihilation),
// psi_k^dagger (creation) and omega_k^{+-1}, kept as formal sums of words.
//
//   psi_k  v(l)        = (-1)^{l_1+...+l_{k-1}} v(l - e_k), zero if l_k = 0
//   psid_k v(l)        = (-1)^{l_1+...+l_{k-1}} v(l + e_k), zero if l_k = 1
//   omega_k v(l)       = q^{-l_k} v(l)
//
// Words act right to left.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhowe/fockspace.hpp"
#include "qhowe/qscalar.hpp"
#include "qhowe/report.hpp"
#include "qhowe/sparse_matrix.hpp"

namespace qhowe {

enum class CliffordKind { Annihilate, Create, Omega, OmegaInv };

struct CliffordGen {
  CliffordKind kind;
  int index;
  friend bool operator==(const CliffordGen&, const CliffordGen&) = default;
};

[[nodiscard]] inline CliffordGen psi(int k) { return {CliffordKind::Annihilate, k}; }
[[nodiscard]] inline CliffordGen psid(int k) { return {CliffordKind::Create, k}; }
[[nodiscard]] inline CliffordGen omega(int k) { return {CliffordKind::Omega, k}; }
[[nodiscard]] inline CliffordGen omega_inv(int k) { return {CliffordKind::OmegaInv, k}; }

/// "psi3", "psid3", "w3", "w3^-1"
[[nodiscard]] std::string to_string(const CliffordGen& g);

using Word = std::vector<CliffordGen>;

/// Classical operators have no omega and take coefficients at q = 1.
enum class Flavor { Quantum, Classical };

struct WordTerm {
  QLaurent coeff;
  Word word;
};

class OperatorExpr {
 public:
  explicit OperatorExpr(int length, Flavor flavor = Flavor::Quantum);

  [[nodiscard]] static OperatorExpr identity(int length, Flavor flavor = Flavor::Quantum);
  [[nodiscard]] static OperatorExpr monomial(int length, Word word, const QLaurent& coeff = 1,
                                             Flavor flavor = Flavor::Quantum);

  /// Throws std::invalid_argument for out-of-range sites or omega in a
  /// classical operator.
  void add_term(const QLaurent& coeff, Word word);

  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] Flavor flavor() const { return flavor_; }
  [[nodiscard]] const std::vector<WordTerm>& terms() const { return terms_; }

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const QLaurent& c);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(const QLaurent& c, OperatorExpr a) { return a *= c; }
  /// Composition: (a * b) v = a (b v).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// e.g. "q^-1 w1^-1 psid1 psi2 + psid2 psi3"
  [[nodiscard]] std::string to_string() const;

 private:
  void check_compatible(const OperatorExpr& o) const;

  int length_;
  Flavor flavor_;
  std::vector<WordTerm> terms_;
};

/// Result of a single word on a basis state: sign * q^q_exponent * v(state).
struct WordImage {
  int sign;
  int q_exponent;
  BasisState state;
};

[[nodiscard]] std::optional<WordImage> act(const Word& word, const BasisState& s);

[[nodiscard]] QVector apply(const OperatorExpr& op, const BasisState& s);
[[nodiscard]] QVector apply(const OperatorExpr& op, const QVector& v);

inline constexpr int kDefaultMatrixCap = 16;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix on all 2^N basis states, column index = BasisState::bits().
[[nodiscard]] QMatrix to_matrix(const OperatorExpr& op, int cap = kDefaultMatrixCap);

/// a b - q^k b a
[[nodiscard]] OperatorExpr q_commutator(const OperatorExpr& a, const OperatorExpr& b, int k);
/// a b + b a
[[nodiscard]] OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);

/// Matrix identities on N sites:
///   {psi_i, psi_j} = {psid_i, psid_j} = 0,  {psi_i, psid_j} = delta_ij,
///   psi_i psid_i + q^{+-1} psid_i psi_i = omega_i^{-+1},
///   [psid_i psi_{i+1}, psid_{i+1} psi_{i+2}]_q = omega_{i+1}^-1 psid_i psi_{i+2},
/// and the classical operators reproduce the q = 1 signs.
[[nodiscard]] Report check_clifford_relations(int sites, int cap = kDefaultMatrixCap);

}  // namespace qhowe
