// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Partitions in an n x m box, joint highest-weight vectors, Weyl
// dimensions, the multiplicity-free decomposition of the exterior algebra on
// the grid, and the dual Cauchy identity.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhowe/fockspace.hpp"
#include "qhowe/qclifford.hpp"
#include "qhowe/qscalar.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

class Partition {
 public:
  Partition() = default;
  /// Must be weakly decreasing and nonnegative; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  /// "2,1" (empty string for the empty partition).
  [[nodiscard]] static Partition parse(const std::string& text);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  /// mu_i for i >= 1, zero past the length.
  [[nodiscard]] int part(int i) const;
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const;
  [[nodiscard]] Partition conjugate() const;
  [[nodiscard]] bool fits_in_box(int n, int m) const;
  /// "(2,1)", "()" for the empty partition.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordered by size, then reverse lexicographically within a size:
/// (), (1), (2), (1,1), (2,1), (2,2) for a 2 x 2 box.
[[nodiscard]] std::vector<Partition> partitions_in_box(int n, int m);

/// Cells (i, j) with j <= mu_i occupied.
[[nodiscard]] BasisState young_state(const Partition& mu, const GridShape& shape);

/// The joint highest-weight vector for mu: the Young-diagram state with
/// coefficient 1. The flavor only records which maps it is tested against.
[[nodiscard]] QVector hwv(const Partition& mu, const GridShape& shape, Flavor flavor);

/// Raising operators kill v; quantum: lambda_q(K_i) v = q^{mu_i - mu_{i+1}} v
/// and rho_q(K_j) v = q^{mu'_j - mu'_{j+1}} v; classical: lambda(Lb_i) v =
/// mu_i v and rho(Lb_j) v = mu'_j v.
[[nodiscard]] Report verify_hwv_vector(const QVector& v, const Partition& mu,
                                       const GridShape& shape, Flavor flavor);
[[nodiscard]] Report verify_hwv(const Partition& mu, const GridShape& shape, Flavor flavor);

/// prod_{i<j} (mu_i - mu_j + j - i)/(j - i)
[[nodiscard]] long weyl_dim(const Partition& mu, int p);

[[nodiscard]] long binomial(int a, int b);

/// sum_{|mu| = k} weyl_dim(mu, n) weyl_dim(mu', m) = binomial(nm, k) for all k.
[[nodiscard]] Report dimension_identity(int n, int m);

/// Closes each hwv under the specialized lowering operators and compares
/// span dimensions with the Weyl products; also checks the per-degree
/// binomial sums, the total 2^{nm}, the joint span, and agreement across
/// specialization values. Report extra carries the decomposition table.
[[nodiscard]] Report cyclic_span_dims(int n, int m, const std::vector<Rational>& spec_values,
                                      int cap = kDefaultMatrixCap);

/// Joint weight spaces where the raising operators (specialized) have a
/// kernel: exactly one vector at each weight (mu, mu') for mu in the box,
/// none elsewhere, binomial(n+m, n) in total.
[[nodiscard]] Report multiplicity_free_check(int n, int m, const Rational& spec_value,
                                             int cap = kDefaultMatrixCap);

/// Every basis state has row L-exponents <= m and column L-exponents <= n.
[[nodiscard]] Report hw_bounds_check(int n, int m, int cap = kDefaultMatrixCap);

/// v(gamma_j), j = 0..n, are killed by every Phi_{q,n}(E_i) and the degree-j
/// part has dimension binomial(n, j) = weyl_dim((1^j), n).
[[nodiscard]] Report fundamental_decomp(int n);

/// Polynomial in a fixed number of variables with rational coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int vars) : vars_(vars) {}

  [[nodiscard]] static MultiPoly constant(int vars, const Rational& c);
  [[nodiscard]] static MultiPoly variable(int vars, int k);  // 0-based
  [[nodiscard]] static MultiPoly monomial(const Exponents& e, const Rational& c = 1);

  [[nodiscard]] int vars() const { return vars_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  /// Same polynomial in `total` variables, variable k becoming k + offset.
  [[nodiscard]] MultiPoly embed(int total, int offset) const;

  MultiPoly& operator+=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void check_vars(const MultiPoly& o) const;

  int vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Sum over semistandard tableaux of shape mu with entries 1..p of the
/// content monomial.
[[nodiscard]] MultiPoly schur_poly(const Partition& mu, int p);

/// prod (1 + a_i b_j) = sum_mu s_mu(a) s_mu'(b) = sum over grid states of
/// a^{row degrees} b^{column degrees}.
[[nodiscard]] Report dual_cauchy_check(int n, int m);

}  // namespace qhowe
