// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// U_q(gl_p) through its representations: generators, the natural module,
// defining-relation and Serre checkers, and tensor products via the two
// coproducts.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhowe/qscalar.hpp"
#include "qhowe/report.hpp"
#include "qhowe/sparse_matrix.hpp"

namespace qhowe {

enum class QGenKind { E, F, K, KInv, L, LInv };

/// E_i, F_i, K_i^{+-1} for 1 <= i < rank; L_i^{+-1} for 1 <= i <= rank.
struct QGroupGen {
  QGenKind kind;
  int index;
  int rank;

  QGroupGen(QGenKind kind, int index, int rank);
  friend bool operator==(const QGroupGen&, const QGroupGen&) = default;
};

/// "E_1", "K_2^-1", "L_3"
[[nodiscard]] std::string to_string(const QGroupGen& g);

/// All generators of U_q(gl_p) in a fixed order: E, F, K, K^-1, L, L^-1.
[[nodiscard]] std::vector<QGroupGen> all_generators(int p);

/// Cartan matrix of type A_{p-1}, indices 1..p-1.
struct CartanData {
  int rank;
  [[nodiscard]] int entry(int i, int j) const;
};

/// <eps_i, alpha_j> = delta_{ij} - delta_{i,j+1}: the q-exponent in
/// L_i E_j L_i^-1 = q^{<eps_i, alpha_j>} E_j.
[[nodiscard]] int weight_pairing(int i, int j);

/// X v_j on the natural module, as (coefficient, target index); nullopt
/// when zero.
[[nodiscard]] std::optional<std::pair<QLaurent, int>> natural_action(const QGroupGen& g, int j);

class Representation {
 public:
  Representation(int rank, std::vector<QMatrix> e, std::vector<QMatrix> f,
                 std::vector<QMatrix> l, std::vector<QMatrix> linv, int state_length = 0);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  /// Sites of the exterior algebra when the basis is indexed by bitmasks,
  /// 0 otherwise.
  [[nodiscard]] int state_length() const { return state_length_; }

  [[nodiscard]] const QMatrix& E(int i) const;
  [[nodiscard]] const QMatrix& F(int i) const;
  [[nodiscard]] const QMatrix& K(int i) const;
  [[nodiscard]] const QMatrix& KInv(int i) const;
  [[nodiscard]] const QMatrix& L(int i) const;
  [[nodiscard]] const QMatrix& LInv(int i) const;
  [[nodiscard]] const QMatrix& operator()(const QGroupGen& g) const;

  /// "0110" for bitmask bases, "e3" (1-based) otherwise.
  [[nodiscard]] std::string basis_label(std::size_t j) const;

 private:
  void check_root(int i) const;
  void check_weight(int i) const;

  int rank_;
  std::size_t dim_;
  int state_length_;
  std::vector<QMatrix> e_, f_, k_, kinv_, l_, linv_;
};

/// V^(p) with E_i v_j = delta_{i+1,j} v_i, F_i v_j = delta_{ij} v_{i+1},
/// L_i v_j = q^{delta_ij} v_j.
[[nodiscard]] Representation natural_rep(int p);

using BasisLabeler = std::function<std::string(std::size_t)>;

/// Compare two matrices; on mismatch the witness is the first differing column.
[[nodiscard]] CheckResult compare_matrices(std::string relation, std::vector<int> indices,
                                           const QMatrix& lhs, const QMatrix& rhs,
                                           const BasisLabeler& label);

/// Commutation of K's and L's, inverses, K- and L-conjugation of E and F,
/// and [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1) by exact division.
[[nodiscard]] Report check_relations(const Representation& rep,
                                     const std::string& name = "relations");

/// For |i-j| > 1, [X_i, X_j] = 0; for |i-j| = 1 both the q-binomial form
/// X_j X_i^2 - [2] X_i X_j X_i + X_i^2 X_j = 0 and the nested form
/// [X_i, [X_i, X_j]_q]_{q^-1} = 0, for X in {E, F}.
[[nodiscard]] Report check_serre(const Representation& rep, const std::string& name = "serre");

enum class Coproduct {
  /// E -> E (x) K + 1 (x) E,  F -> F (x) 1 + K^-1 (x) F
  Standard,
  /// E -> E (x) 1 + K (x) E,  F -> F (x) K^-1 + 1 (x) F
  Alternate,
};

/// Iterated left to right; the first factor occupies the low basis digits.
[[nodiscard]] Representation coproduct_rep(const std::vector<Representation>& factors,
                                           Coproduct convention);

/// (Delta (x) id) Delta = (id (x) Delta) Delta on a (x) b (x) c.
[[nodiscard]] Report check_coassociativity(const Representation& a, const Representation& b,
                                           const Representation& c, Coproduct convention);

}  // namespace qhowe
