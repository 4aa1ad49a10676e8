// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <limits>

#include "oracle.hpp"
#include "qhowe/qscalar.hpp"

using qhowe::exact_div;
using qhowe::NonExactDivision;
using qhowe::q_binomial;
using qhowe::q_int;
using qhowe::QLaurent;
using qhowe::Rational;
using qhowe::specialize;

namespace {

QLaurent q(int e) { return QLaurent::q(e); }

/// Gaussian binomial in t by Pascal's rule on coefficient arrays, then
/// t = q^2 and the symmetric shift q^{-b(a-b)}.
QLaurent gaussian_oracle(int a, int b) {
  // table[x][y] = coefficients of [x choose y]_t
  std::vector<std::vector<std::vector<long>>> table(static_cast<std::size_t>(a + 1));
  for (int x = 0; x <= a; ++x) {
    table[x].resize(static_cast<std::size_t>(x + 1));
    for (int y = 0; y <= x; ++y) {
      if (y == 0 || y == x) {
        table[x][y] = {1};
        continue;
      }
      // [x,y] = [x-1,y-1] + t^y [x-1,y]
      const auto& left = table[x - 1][y - 1];
      const auto& right = table[x - 1][y];
      std::vector<long> out(std::max(left.size(), right.size() + y), 0);
      for (std::size_t k = 0; k < left.size(); ++k) out[k] += left[k];
      for (std::size_t k = 0; k < right.size(); ++k) out[k + y] += right[k];
      table[x][y] = out;
    }
  }
  QLaurent p;
  const auto& coeffs = table[a][b];
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    p += QLaurent::monomial(Rational(coeffs[k]), 2 * static_cast<int>(k) - b * (a - b));
  }
  return p;
}

}  // namespace

TEST_CASE("rational normal form and text") {
  Rational r(6, 4);
  r.canonicalize();
  CHECK(qhowe::rational_to_string(r) == "3/2");
  CHECK(qhowe::rational_to_string(Rational(0)) == "0/1");
  CHECK(qhowe::rational_to_string(Rational(-2)) == "-2/1");
  CHECK(qhowe::rational_from_string("-4/6") == Rational(-2, 3));
  CHECK(qhowe::rational_from_string("5") == Rational(5));
  CHECK_THROWS_AS((void)qhowe::rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS((void)qhowe::rational_from_string("abc"), std::invalid_argument);
  CHECK(qhowe::rational_pow(Rational(2), -3) == Rational(1, 8));
  CHECK(qhowe::rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("q-integers") {
  CHECK(q_int(0) == QLaurent(0L));
  CHECK(q_int(1) == QLaurent(1L));
  CHECK(q_int(3) == q(2) + 1 + q(-2));
  CHECK(q_int(3).to_string() == "q^2 + 1 + q^-2");
  CHECK_THROWS_AS((void)q_int(-1), std::invalid_argument);
  for (int k = 0; k <= 12; ++k) CHECK(specialize(q_int(k), 1) == k);
  // (x^k - x^-k)/(x - x^-1) at rational points
  for (const Rational& x : {Rational(2), Rational(3), Rational(-5, 7)}) {
    for (int k = 0; k <= 9; ++k) {
      const Rational want = (oracle::power(x, k) - oracle::power(x, -k)) / (x - 1 / x);
      CHECK(specialize(q_int(k), x) == want);
    }
  }
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(2, 1) == q(1) + q(-1));
  CHECK(q_binomial(3, 0) == QLaurent(1L));
  CHECK(q_binomial(4, 2) == q(4) + q(2) + 2 + q(-2) + q(-4));
  CHECK_THROWS_AS((void)q_binomial(2, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)q_binomial(2, -1), std::invalid_argument);
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(q_binomial(a, b) == gaussian_oracle(a, b));
    }
  }
  // q-Pascal, with [a-1, a] = 0
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= a; ++b) {
      QLaurent rhs = q_binomial(a - 1, b - 1) * q(a - b);
      if (b <= a - 1) rhs += q_binomial(a - 1, b) * q(-b);
      CHECK(q_binomial(a, b) == rhs);
    }
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(q(2) - q(-2), q(1) - q(-1)) == q(1) + q(-1));
  CHECK(exact_div(q(1) - q(-1), q(1) - q(-1)) == QLaurent(1L));
  CHECK_THROWS_AS((void)exact_div(q(1), q(1) - q(-1)), NonExactDivision);
  CHECK_THROWS_AS((void)exact_div(q(1), QLaurent()), std::invalid_argument);
  CHECK(exact_div(QLaurent::monomial(Rational(3, 2), 5), QLaurent::monomial(3, 2)) ==
        QLaurent::monomial(Rational(1, 2), 3));

  oracle::Gen gen(20250101);
  for (int t = 0; t < 300; ++t) {
    const QLaurent a = gen.laurent(6, 8);
    const QLaurent b = gen.nonzero_laurent(6, 8);
    CHECK(exact_div(a * b, b) == a);
    // adding a lower-degree remainder makes the division inexact
    if (b.terms().size() > 1) {
      const QLaurent r = QLaurent::monomial(1, (a * b).is_zero() ? 0 : (a * b).min_exponent() - 1);
      CHECK_THROWS_AS((void)exact_div(a * b + r, b), NonExactDivision);
    }
  }
}

TEST_CASE("specialization") {
  CHECK(specialize(q(1) + q(-1), 1) == 2);
  CHECK(specialize(q(2) + 1 + q(-2), 2) == Rational(21, 4));
  CHECK(specialize(q(1) - q(-1), 1) == 0);
  CHECK_THROWS_AS((void)specialize(q(1), 0), std::invalid_argument);

  oracle::Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    const QLaurent a = gen.laurent(5, 6);
    const QLaurent b = gen.laurent(5, 6);
    Rational x = gen.rational();
    if (x == 0) x = 3;
    CHECK(specialize(a + b, x) == specialize(a, x) + specialize(b, x));
    CHECK(specialize(a * b, x) == specialize(a, x) * specialize(b, x));
  }
}

TEST_CASE("ring axioms and normal form") {
  oracle::Gen gen(99);
  for (int t = 0; t < 200; ++t) {
    const QLaurent a = gen.laurent(5, 5);
    const QLaurent b = gen.laurent(5, 5);
    const QLaurent c = gen.laurent(5, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const QLaurent diff = a * b - c;
    for (const auto& term : diff.terms()) CHECK(term.second != 0);
    const QLaurent sum = a + b;
    const auto& terms = sum.terms();
    for (std::size_t k = 1; k < terms.size(); ++k) CHECK(terms[k - 1].first < terms[k].first);
  }
  CHECK_THROWS_AS((void)QLaurent::q(std::numeric_limits<int>::max()).shifted(1), std::overflow_error);
}

TEST_CASE("JSON form") {
  nlohmann::json j = q(1) + q(-1);
  CHECK(j == nlohmann::json::parse(R"({"-1":"1/1","1":"1/1"})"));
  const QLaurent p = QLaurent::monomial(Rational(-3, 4), -2) + 5;
  CHECK(nlohmann::json(p).get<QLaurent>() == p);
  CHECK(QLaurent::monomial(Rational(-1, 2), -1).to_string() == "-1/2*q^-1");
  CHECK(QLaurent().to_string() == "0");
}
