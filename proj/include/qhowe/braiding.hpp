// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Weights of gl_p, Casimir eigenvalues, and the braiding operator R-check on
// V^(n) (x) V^(n) built from its two eigenspaces.

#pragma once

#include <vector>

#include "qhowe/qgroup.hpp"
#include "qhowe/qscalar.hpp"
#include "qhowe/report.hpp"
#include "qhowe/sparse_matrix.hpp"

namespace qhowe {

/// Integer weight in the eps-basis.
struct Weight {
  std::vector<int> components;

  [[nodiscard]] static Weight eps(int i, int p);
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
  friend bool operator==(const Weight&, const Weight&) = default;
};

[[nodiscard]] long inner(const Weight& a, const Weight& b);

/// <lambda, lambda + 2 rho> with rho = (p-1+shift, p-2+shift, ..., shift).
[[nodiscard]] long casimir_eig(const Weight& lambda, int p, int rho_shift = 0);

struct SignedQPower {
  int sign;
  int exponent;
  [[nodiscard]] QLaurent value() const { return QLaurent::monomial(sign, exponent); }
  friend bool operator==(const SignedQPower&, const SignedQPower&) = default;
};

/// Scalar by which R-check acts on V_nu inside V_mu (x) V_mu, for mu = eps_1
/// and nu in {2 eps_1, eps_1 + eps_2}: exponent chi_nu/2 - chi_mu, sign +1 on
/// the constituent that tends to symmetric tensors and -1 on the other.
/// Throws std::invalid_argument on a non-integral exponent or an
/// unsupported pair.
[[nodiscard]] SignedQPower braiding_eigenvalue(const Weight& mu, const Weight& nu, int p,
                                               int rho_shift = 0);

/// Basis index of v_i (x) v_j in V^(n) (x) V^(n): (i-1) + n (j-1).
[[nodiscard]] std::size_t pair_index(int n, int i, int j);

/// Eigenvectors of R-check: v_i (x) v_i and v_i (x) v_j + q v_j (x) v_i
/// (i < j) for the symmetric eigenvalue, v_i (x) v_j - q^-1 v_j (x) v_i
/// for the other.
[[nodiscard]] std::vector<QMatrix::Column> symmetric_eigenvectors(int n);
[[nodiscard]] std::vector<QMatrix::Column> antisymmetric_eigenvectors(int n);

/// Operator acting by sym_eig and anti_eig on the two spans, solved
/// basis-by-basis by exact division by (q + q^-1).
[[nodiscard]] QMatrix build_rhat_from_eigenvalues(int n, const QLaurent& sym_eig,
                                                  const QLaurent& anti_eig);
/// The braiding with eigenvalues from braiding_eigenvalue.
[[nodiscard]] QMatrix build_rhat(int n);

[[nodiscard]] Report check_yang_baxter(const QMatrix& rhat, int n);
[[nodiscard]] Report check_hecke(const QMatrix& rhat, int n);
/// [R-check, Delta(X)] = 0 for all generators X, standard coproduct.
[[nodiscard]] Report check_intertwiner(const QMatrix& rhat, int n);
/// specialize(R-check, 1) is the flip v_i (x) v_j -> v_j (x) v_i.
[[nodiscard]] Report check_classical_limit(const QMatrix& rhat, int n);
/// R-check times each eigenvector equals the braiding_eigenvalue multiple.
[[nodiscard]] Report check_eigenvalues(const QMatrix& rhat, int n);
/// The two highest-weight vectors are killed by every Delta(E_i) and have
/// the expected K-weights.
[[nodiscard]] Report check_highest_weight_vectors(int n);

[[nodiscard]] inline Report check_yang_baxter(int n) { return check_yang_baxter(build_rhat(n), n); }
[[nodiscard]] inline Report check_hecke(int n) { return check_hecke(build_rhat(n), n); }
[[nodiscard]] inline Report check_intertwiner(int n) { return check_intertwiner(build_rhat(n), n); }

struct Sym2Dims {
  int sym;       // dim of the +q eigenspace
  int quotient;  // n^2 - sym: degree-2 part of the braided exterior algebra
  Report report;
};

/// The +q eigenspace has the listed eigenvectors as a basis: they are
/// eigenvectors exactly and independent, and the nullity of R-check - q
/// at q = 2 and q = 3 is no larger.
[[nodiscard]] Sym2Dims sym2q_dims(int n);

/// Everything above for one rank.
[[nodiscard]] Report braiding_suite(int n);

}  // namespace qhowe
