// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Exact scalars: big rationals and Laurent polynomials in q with rational
// coefficients.

#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhowe {

using Rational = mpq_class;

[[nodiscard]] inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Always "num/den", e.g. "1/1", "-3/2".
[[nodiscard]] std::string rational_to_string(const Rational& r);
[[nodiscard]] Rational rational_from_string(const std::string& s);

/// r^e for any integer e; throws std::domain_error on 0^negative.
[[nodiscard]] Rational rational_pow(const Rational& r, int e);

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class QLaurent {
 public:
  using Term = std::pair<int, Rational>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor)
  QLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] static QLaurent monomial(const Rational& c, int exponent);
  /// q^e
  [[nodiscard]] static QLaurent q(int exponent = 1);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Single term c q^e.
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  /// Sorted by exponent, no zero coefficients.
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] Rational coeff(int exponent) const;
  [[nodiscard]] int min_exponent() const;
  [[nodiscard]] int max_exponent() const;

  /// Multiply by q^e.
  [[nodiscard]] QLaurent shifted(int e) const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent operator-() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  /// e.g. "q^2 + 1 + q^-2", "-1/2*q^-1", "0"
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

[[nodiscard]] inline bool is_zero(const QLaurent& p) { return p.is_zero(); }

/// Throws NonExactDivision when den does not divide num in Q[q, q^-1],
/// std::invalid_argument when den is zero.
[[nodiscard]] QLaurent exact_div(const QLaurent& num, const QLaurent& den);

/// [k]_q = (q^k - q^-k) / (q - q^-1), k >= 0.
[[nodiscard]] QLaurent q_int(int k);
[[nodiscard]] QLaurent q_factorial(int k);
/// Symmetric Gaussian binomial, 0 <= b <= a.
[[nodiscard]] QLaurent q_binomial(int a, int b);

/// Evaluate at a nonzero rational.
[[nodiscard]] Rational specialize(const QLaurent& p, const Rational& value);

/// {"exponent": "num/den", ...}
void to_json(nlohmann::json& j, const QLaurent& p);
void from_json(const nlohmann::json& j, QLaurent& p);

}  // namespace qhowe
