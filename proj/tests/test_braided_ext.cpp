// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "qhowe/braided_ext.hpp"
#include "qhowe/embeddings.hpp"

using namespace qhowe;

namespace {

QVector basis(const char* s) { return QVector::basis(BasisState::from_string(s)); }

/// Inversion count by pairs; the normal form picks up (-q^-1) per inversion.
std::optional<NormalForm> normalize_oracle(const std::vector<int>& w, int n) {
  std::set<int> seen(w.begin(), w.end());
  if (seen.size() != w.size()) return std::nullopt;
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b] ? 1 : 0;
  }
  std::uint64_t bits = 0;
  for (int x : w) bits |= std::uint64_t{1} << (x - 1);
  return NormalForm{QLaurent::monomial(inv % 2 ? -1 : 1, -inv), BasisState(n, bits)};
}

}  // namespace

TEST_CASE("normal form") {
  auto a = normalize({2, 1}, 2);
  REQUIRE(a);
  CHECK(a->coeff == QLaurent::monomial(-1, -1));
  CHECK(a->state.to_string() == "11");
  CHECK_FALSE(normalize({1, 1}, 2));
  auto b = normalize({3, 1, 2}, 3);
  REQUIRE(b);
  CHECK(b->coeff == QLaurent::q(-2));
  CHECK(b->state.to_string() == "111");
  CHECK(normalize({}, 3)->state.to_string() == "000");

  oracle::Gen gen(17);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.integer(1, 7);
    std::vector<int> w(static_cast<std::size_t>(gen.integer(0, 6)));
    for (auto& x : w) x = gen.integer(1, n);
    const auto got = normalize(w, n);
    const auto want = normalize_oracle(w, n);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->coeff == want->coeff);
      CHECK(got->state == want->state);
    }
  }
}

TEST_CASE("multiplication") {
  CHECK(mul(basis("10"), basis("01")) == basis("11"));
  CHECK(mul(basis("01"), basis("10")) == QLaurent::monomial(-1, -1) * basis("11"));
  CHECK(mul(basis("10"), basis("10")).is_zero());

  oracle::Gen gen(23);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.integer(1, 6);
    const QVector a = QVector::basis(BasisState(n, gen.bits(n)));
    const QVector b = QVector::basis(BasisState(n, gen.bits(n)));
    const QVector c = QVector::basis(BasisState(n, gen.bits(n)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    const int da = BasisState(n, a.entries().begin()->first).degree();
    const int db = BasisState(n, b.entries().begin()->first).degree();
    const QVector ab = mul(a, b);
    for (const auto& [bits, coeff] : ab.entries()) CHECK(BasisState(n, bits).degree() == da + db);
  }
}

TEST_CASE("quantized inner and exterior multiplication") {
  CHECK(iota_q(2, basis("11")) == QLaurent::monomial(-1, 1) * basis("10"));
  CHECK(eps_q(1, basis("01")) == basis("11"));
  CHECK(iota_q(1, basis("01")).is_zero());
  CHECK(eps_q(2, basis("01")).is_zero());

  // the Clifford words agree with the direct formulas everywhere
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const BasisState s(n, bits);
        CHECK(apply(iota_q_word(i, n), s) == iota_q(i, QVector::basis(s)));
        CHECK(apply(eps_q_word(i, n), s) == eps_q(i, QVector::basis(s)));
      }
    }
  }
  // left multiplication by v_i
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      const QVector vi = QVector::basis(BasisState(n, std::uint64_t{1} << (i - 1)));
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const QVector v = QVector::basis(BasisState(n, bits));
        CHECK(eps_q(i, v) == mul(vi, v));
      }
    }
  }
  // E_i -> eps_i iota_{i+1}, F_i -> eps_{i+1} iota_i as operators
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(to_matrix(eps_q_word(i, n) * iota_q_word(i + 1, n)) == to_matrix(phi_q(n, {QGenKind::E, i, n})));
      CHECK(to_matrix(eps_q_word(i + 1, n) * iota_q_word(i, n)) == to_matrix(phi_q(n, {QGenKind::F, i, n})));
    }
  }
  const BasisState s = BasisState::from_string("101");
  CHECK(apply(eps_q_word(2, 3) * iota_q_word(3, 3), s) ==
        apply(phi_q(3, {QGenKind::E, 2, 3}), s));
}

TEST_CASE("module-algebra action") {
  CHECK(module_algebra_action({QGenKind::E, 1, 2}, basis("01")) == basis("10"));
  CHECK(module_algebra_action({QGenKind::L, 1, 2}, basis("11")) == QLaurent::q(1) * basis("11"));
  CHECK(module_algebra_action({QGenKind::E, 1, 2}, basis("10")).is_zero());
  CHECK(module_algebra_action({QGenKind::E, 1, 3}, basis("000")).is_zero());
  CHECK(module_algebra_action({QGenKind::K, 2, 3}, basis("000")) == basis("000"));
  // E_i kills anything with l_{i+1} = 0
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const BasisState s(n, bits);
        if (s.occupied(i + 1)) continue;
        CHECK(module_algebra_action({QGenKind::E, i, n}, QVector::basis(s)).is_zero());
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const Report r = check_module_algebra(n);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}
