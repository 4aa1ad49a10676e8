// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "oracle.hpp"
#include "qhowe/qclifford.hpp"

using namespace qhowe;

namespace {

OperatorExpr mono(int n, Word w, const QLaurent& c = 1) { return OperatorExpr::monomial(n, std::move(w), c); }

QVector basis(const char* s) { return QVector::basis(BasisState::from_string(s)); }

oracle::Dense dense_word(int n, const Word& w, const Rational& x) {
  oracle::Dense d = oracle::eye(std::size_t{1} << n);
  for (const auto& g : w) {
    oracle::Dense f;
    switch (g.kind) {
      case CliffordKind::Annihilate: f = oracle::psi(n, g.index); break;
      case CliffordKind::Create: f = oracle::psid(n, g.index); break;
      case CliffordKind::Omega: f = oracle::omega(n, g.index, x, 1); break;
      case CliffordKind::OmegaInv: f = oracle::omega(n, g.index, x, -1); break;
    }
    d = oracle::mul(d, f);  // leftmost letter is applied last
  }
  return d;
}

}  // namespace

TEST_CASE("generator action on basis states") {
  CHECK(apply(mono(2, {psid(2)}), basis("10")) == QLaurent(-1L) * basis("11"));
  CHECK(apply(mono(2, {omega(1)}), basis("10")) == QLaurent::q(-1) * basis("10"));
  CHECK(apply(mono(2, {psi(1)}), basis("00")).is_zero());
  CHECK(apply(mono(2, {omega_inv(1)}), basis("10")) == QLaurent::q(1) * basis("10"));
  CHECK(apply(mono(3, {psi(3)}), basis("111")) == basis("110"));
  CHECK(apply(mono(3, {psi(2)}), basis("111")) == QLaurent(-1L) * basis("101"));
}

TEST_CASE("matrix realization") {
  const QMatrix id = to_matrix(OperatorExpr::identity(1));
  CHECK(id == QMatrix::identity(2));
  const QMatrix p = to_matrix(mono(1, {psi(1)}));
  CHECK(p.nnz() == 1);
  CHECK(p.at(0, 1) == QLaurent(1L));
  // psi psid + q^-1 psid psi = omega on one site
  const OperatorExpr lhs = mono(1, {psi(1), psid(1)}) + mono(1, {psid(1), psi(1)}, QLaurent::q(-1));
  CHECK(to_matrix(lhs) == to_matrix(mono(1, {omega(1)})));
  CHECK(to_matrix(mono(1, {omega(1)})).at(1, 1) == QLaurent::q(-1));
  CHECK_THROWS_AS((void)to_matrix(OperatorExpr::identity(5), 4), CapExceeded);
}

TEST_CASE("random words agree with dense generator products") {
  oracle::Gen gen(42);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(1, 4);
    Word w;
    const int len = gen.integer(0, 6);
    for (int k = 0; k < len; ++k) {
      const int idx = gen.integer(1, n);
      switch (gen.integer(0, 3)) {
        case 0: w.push_back(psi(idx)); break;
        case 1: w.push_back(psid(idx)); break;
        case 2: w.push_back(omega(idx)); break;
        default: w.push_back(omega_inv(idx)); break;
      }
    }
    const QLaurent c = gen.nonzero_laurent(3, 3);
    const QMatrix m = to_matrix(mono(n, w, c));
    for (const Rational& x : {Rational(2), Rational(-3, 5)}) {
      oracle::Dense want = dense_word(n, w, x);
      want = oracle::scale(want, specialize(c, x));
      CHECK(oracle::evaluate(m, x) == want);
    }
  }
}

TEST_CASE("composition and linearity") {
  oracle::Gen gen(8);
  for (int t = 0; t < 50; ++t) {
    const int n = 3;
    const OperatorExpr a = mono(n, {psid(gen.integer(1, n)), psi(gen.integer(1, n))}, gen.laurent(2, 2));
    const OperatorExpr b = mono(n, {omega(gen.integer(1, n)), psi(gen.integer(1, n))}, gen.laurent(2, 2));
    QVector v(n);
    v.add(BasisState(n, gen.bits(n)), gen.laurent(2, 2));
    v.add(BasisState(n, gen.bits(n)), gen.laurent(2, 2));
    CHECK(apply(a * b, v) == apply(a, apply(b, v)));
    CHECK(apply(a + b, v) == apply(a, v) + apply(b, v));
    CHECK(to_matrix(a * b) == to_matrix(a) * to_matrix(b));
  }
}

TEST_CASE("commutators") {
  const OperatorExpr p1 = mono(2, {psi(1)});
  const OperatorExpr p2 = mono(2, {psi(2)});
  CHECK(to_matrix(q_commutator(p1, p2, 0)) == QLaurent(2L) * to_matrix(p1 * p2));
  CHECK(to_matrix(q_commutator(p1, p1, 0)).is_zero());
  const OperatorExpr a = mono(3, {psid(1), psi(2)});
  const OperatorExpr b = mono(3, {psid(2), psi(3)});
  CHECK(to_matrix(q_commutator(a, b, 1)) == to_matrix(mono(3, {omega_inv(2), psid(1), psi(3)})));
}

TEST_CASE("anticommutation relations, dense oracle at q = 3") {
  const int n = 4;
  const Rational x = 3;
  const std::size_t dim = std::size_t{1} << n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto pi = oracle::psi(n, i);
      const auto pj = oracle::psi(n, j);
      const auto di = oracle::psid(n, i);
      const auto dj = oracle::psid(n, j);
      CHECK(oracle::add(oracle::mul(pi, pj), oracle::mul(pj, pi)) == oracle::zeros(dim));
      CHECK(oracle::add(oracle::mul(di, dj), oracle::mul(dj, di)) == oracle::zeros(dim));
      CHECK(oracle::add(oracle::mul(pi, dj), oracle::mul(dj, pi)) ==
            (i == j ? oracle::eye(dim) : oracle::zeros(dim)));
    }
    const auto pp = oracle::mul(oracle::psi(n, i), oracle::psid(n, i));
    const auto dp = oracle::mul(oracle::psid(n, i), oracle::psi(n, i));
    CHECK(oracle::add(pp, dp, x) == oracle::omega(n, i, x, -1));
    CHECK(oracle::add(pp, dp, 1 / x) == oracle::omega(n, i, x, 1));
  }
}

TEST_CASE("relation suite") {
  for (int n = 1; n <= 6; ++n) {
    const Report r = check_clifford_relations(n);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("classical operators") {
  CHECK_THROWS_AS((void)OperatorExpr::monomial(2, {omega(1)}, 1, Flavor::Classical), std::invalid_argument);
  const OperatorExpr c = OperatorExpr::monomial(2, {psid(1), psi(2)}, QLaurent::q(3), Flavor::Classical);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].coeff == QLaurent(1L));
  CHECK_THROWS_AS((void)(c + mono(2, {psi(1)})), std::invalid_argument);
  CHECK_THROWS_AS((void)mono(2, {psi(3)}), std::invalid_argument);
}

TEST_CASE("printer") {
  const OperatorExpr e = mono(2, {omega_inv(1), psid(1), psi(2)}, QLaurent::q(-1));
  CHECK(e.to_string() == "q^-1 w1^-1 psid1 psi2");
  CHECK(OperatorExpr(2).to_string() == "0");
  CHECK(OperatorExpr::identity(2).to_string() == "1");
  CHECK(to_string(omega(3)) == "w3");
}
