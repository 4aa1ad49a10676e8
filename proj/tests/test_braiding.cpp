// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracle.hpp"
#include "qhowe/braiding.hpp"

using namespace qhowe;

namespace {

// <lambda, lambda + 2 rho> written out by hand
long casimir_oracle(const std::vector<int>& lambda) {
  const int p = static_cast<int>(lambda.size());
  long s = 0;
  for (int k = 0; k < p; ++k) s += static_cast<long>(lambda[k]) * (lambda[k] + 2 * (p - 1 - k));
  return s;
}

}  // namespace

TEST_CASE("Casimir eigenvalues") {
  CHECK(casimir_eig(Weight::eps(1, 3), 3) == 5);
  CHECK(casimir_eig(Weight{{0, 0, 0}}, 3) == 0);
  CHECK(casimir_eig(2 * Weight::eps(1, 3), 3) == 12);
  CHECK(casimir_eig(Weight::eps(1, 3) + Weight::eps(2, 3), 3) == 8);
  CHECK_THROWS_AS((void)casimir_eig(Weight{{1, 0}}, 3), std::invalid_argument);
  oracle::Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    const int p = gen.integer(1, 5);
    std::vector<int> w;
    for (int k = 0; k < p; ++k) w.push_back(gen.integer(-4, 4));
    CHECK(casimir_eig(Weight{w}, p) == casimir_oracle(w));
  }
}

TEST_CASE("braiding eigenvalues") {
  for (int p = 2; p <= 5; ++p) {
    const Weight e1 = Weight::eps(1, p);
    const Weight e2 = Weight::eps(2, p);
    for (int shift = 0; shift <= 3; ++shift) {
      CHECK(braiding_eigenvalue(e1, 2 * e1, p, shift) == SignedQPower{1, 1});
      CHECK(braiding_eigenvalue(e1, e1 + e2, p, shift) == SignedQPower{-1, -1});
    }
    CHECK_THROWS_AS((void)braiding_eigenvalue(e2, 2 * e2, p), std::invalid_argument);
    CHECK_THROWS_AS((void)braiding_eigenvalue(e1, e1, p), std::invalid_argument);
  }
}

TEST_CASE("R-check on basis vectors") {
  const QMatrix r = build_rhat(2);
  const QLaurent q = QLaurent::q(1);
  const QLaurent qi = QLaurent::q(-1);
  auto col = [&](int i, int j) { return r.column(pair_index(2, i, j)); };
  CHECK(col(1, 1) == QMatrix::Column{{pair_index(2, 1, 1), q}});
  CHECK(col(2, 2) == QMatrix::Column{{pair_index(2, 2, 2), q}});
  CHECK(col(1, 2) == QMatrix::Column{{pair_index(2, 2, 1), QLaurent(1L)}});
  CHECK(col(2, 1) == QMatrix::normalize({{pair_index(2, 1, 2), QLaurent(1L)}, {pair_index(2, 2, 1), q - qi}}));
}

TEST_CASE("braiding suites for n = 2..4") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const Report r = braiding_suite(n);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("dense Yang-Baxter and Hecke at q = 3") {
  const Rational x = 3;
  for (int n = 2; n <= 3; ++n) {
    const auto r = oracle::evaluate(build_rhat(n), x);
    const auto id = oracle::eye(static_cast<std::size_t>(n));
    // kron with the first factor on the low digits
    auto kron = [](const oracle::Dense& a, const oracle::Dense& b) {
      const std::size_t da = a.size();
      const std::size_t db = b.size();
      oracle::Dense out = oracle::zeros(da * db);
      for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < da; ++j1)
          for (std::size_t i2 = 0; i2 < db; ++i2)
            for (std::size_t j2 = 0; j2 < db; ++j2) out[i1 + da * i2][j1 + da * j2] = a[i1][j1] * b[i2][j2];
      return out;
    };
    const auto r1 = kron(r, id);
    const auto r2 = kron(id, r);
    CHECK(oracle::mul(oracle::mul(r1, r2), r1) == oracle::mul(oracle::mul(r2, r1), r2));
    const auto nn = oracle::eye(static_cast<std::size_t>(n * n));
    const auto hecke = oracle::mul(oracle::add(r, nn, -x), oracle::add(r, nn, 1 / x));
    CHECK(hecke == oracle::zeros(static_cast<std::size_t>(n * n)));
  }
}

TEST_CASE("swapped eigenvalues fail the classical limit") {
  for (int n = 2; n <= 3; ++n) {
    const QMatrix bad = build_rhat_from_eigenvalues(n, -QLaurent::q(-1), QLaurent::q(1));
    CHECK(check_hecke(bad, n).passed());
    CHECK(check_intertwiner(bad, n).passed());
    CHECK_FALSE(check_classical_limit(bad, n).passed());
    CHECK_FALSE(check_eigenvalues(bad, n).passed());
  }
  // a plain flip satisfies Yang-Baxter but not Hecke
  QMatrix flip(4);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) flip.set_column(pair_index(2, i, j), {{pair_index(2, j, i), QLaurent(1L)}});
  CHECK(check_yang_baxter(flip, 2).passed());
  CHECK_FALSE(check_hecke(flip, 2).passed());
}

TEST_CASE("q-symmetric square dimensions") {
  const std::pair<int, int> expected[] = {{3, 1}, {6, 3}, {10, 6}};
  for (int n = 2; n <= 4; ++n) {
    const Sym2Dims d = sym2q_dims(n);
    CHECK(d.sym == expected[n - 2].first);
    CHECK(d.quotient == expected[n - 2].second);
    CHECK(d.report.passed());
  }
}
