// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// The braided exterior algebra on V^(n): generators v_1..v_n with
// v_i^2 = 0 and v_i v_j = -q v_j v_i for i < j. Basis monomials
// v_{a_1} ... v_{a_d} (a_1 < ... < a_d) are identified with v(l) where
// l has ones at a_1..a_d.

#pragma once

#include <optional>
#include <vector>

#include "qhowe/fockspace.hpp"
#include "qhowe/qclifford.hpp"
#include "qhowe/qgroup.hpp"

namespace qhowe {

struct NormalForm {
  QLaurent coeff;
  BasisState state;
};

/// Product v_{w_1} ... v_{w_k} rewritten as coeff * v(l); nullopt if it
/// vanishes (a repeated letter). Letters are in 1..n.
[[nodiscard]] std::optional<NormalForm> normalize(const std::vector<int>& word, int n);

/// Bilinear algebra product.
[[nodiscard]] QVector mul(const QVector& a, const QVector& b);

/// Inner multiplication (removes v_i):
///   iota_i v(l) = (-q)^{l_1+...+l_{i-1}} v(l - e_i), zero if l_i = 0.
[[nodiscard]] QVector iota_q(int i, const QVector& v);
/// Exterior multiplication (left multiplication by v_i):
///   eps_i v(l) = (-q^-1)^{l_1+...+l_{i-1}} v(l + e_i), zero if l_i = 1.
[[nodiscard]] QVector eps_q(int i, const QVector& v);

/// The same maps as Clifford words on n sites:
///   iota_i = omega_1^-1 ... omega_{i-1}^-1 psi_i
///   eps_i  = omega_1 ... omega_{i-1} psid_i
[[nodiscard]] OperatorExpr iota_q_word(int i, int n);
[[nodiscard]] OperatorExpr eps_q_word(int i, int n);

/// Action of a U_q(gl_n) generator on the algebra through the iterated
/// standard coproduct on the factors of each basis monomial (counit on
/// the empty monomial).
[[nodiscard]] QVector module_algebra_action(const QGroupGen& g, const QVector& v);

/// module_algebra_action(X, v) = Phi_{q,n}(X) v on every basis state and
/// generator; eps_i iota_{i+1} = Phi(E_i), eps_{i+1} iota_i = Phi(F_i) as
/// matrices.
[[nodiscard]] Report check_module_algebra(int n);

}  // namespace qhowe
