// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>

#include "oracle.hpp"
#include "qhowe/fockspace.hpp"

using qhowe::BasisState;
using qhowe::GridShape;
using qhowe::QLaurent;
using qhowe::QVector;

TEST_CASE("basis state text and bits") {
  const BasisState s = BasisState::from_string("1011");
  CHECK(s.length() == 4);
  CHECK(s.occupied(1));
  CHECK_FALSE(s.occupied(2));
  CHECK(s.bits() == 0b1101);
  CHECK(s.degree() == 3);
  CHECK(s.to_string() == "1011");
  CHECK(s.with_occupied(2).to_string() == "1111");
  CHECK(s.with_vacant(1).to_string() == "0011");
  CHECK_THROWS_AS((void)BasisState::from_string("10a1"), std::invalid_argument);
  CHECK_THROWS_AS((void)BasisState(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS((void)s.occupied(5), std::out_of_range);
  CHECK(BasisState::vacuum(64).degree() == 0);
  CHECK(BasisState(64, ~std::uint64_t{0}).degree() == 64);
}

TEST_CASE("prefix parity") {
  CHECK(qhowe::prefix_parity(BasisState::from_string("1011"), 3) == 1);
  CHECK(qhowe::prefix_parity(BasisState::from_string("1011"), 4) == 2);
  CHECK(qhowe::prefix_parity(BasisState::from_string("0000"), 4) == 0);
  CHECK(qhowe::prefix_parity(BasisState::from_string("1111"), 1) == 0);
  oracle::Gen gen(3);
  for (int t = 0; t < 200; ++t) {
    const int n = gen.integer(1, 20);
    const BasisState s(n, gen.bits(n));
    const int k = gen.integer(1, n);
    CHECK(qhowe::prefix_parity(s, k) == oracle::parity_before(s.bits(), k));
  }
}

TEST_CASE("grid indexing") {
  const GridShape g(3, 4);
  CHECK(g.linear(2, 3) == 8);
  CHECK(g.linear(1, 1) == 1);
  CHECK(g.linear(3, 4) == 12);
  CHECK_THROWS_AS((void)g.linear(4, 1), std::out_of_range);
  CHECK_THROWS_AS((void)GridShape(0, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)GridShape(8, 9), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; n * m <= 64; ++m) {
      const GridShape shape(n, m);
      std::vector<bool> seen(static_cast<std::size_t>(n * m + 1), false);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
          const int k = shape.linear(i, j);
          REQUIRE(k >= 1);
          REQUIRE(k <= n * m);
          CHECK_FALSE(seen[static_cast<std::size_t>(k)]);
          seen[static_cast<std::size_t>(k)] = true;
          CHECK(shape.cell(k) == std::make_pair(i, j));
        }
      }
    }
  }
}

TEST_CASE("row and column weights") {
  {
    const auto w = qhowe::row_col_weights(GridShape(2, 2), BasisState::from_string("1011"));
    CHECK(w.rows == std::vector<int>{2, 1});
    CHECK(w.cols == std::vector<int>{1, 2});
  }
  {
    const auto w = qhowe::row_col_weights(GridShape(3, 3), BasisState::vacuum(9));
    CHECK(w.rows == std::vector<int>{0, 0, 0});
    CHECK(w.cols == std::vector<int>{0, 0, 0});
  }
  {
    const auto w = qhowe::row_col_weights(GridShape(2, 3), BasisState::from_string("111111"));
    CHECK(w.rows == std::vector<int>{3, 3});
    CHECK(w.cols == std::vector<int>{2, 2, 2});
  }
  oracle::Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    const int n = gen.integer(1, 6);
    const int m = gen.integer(1, 6);
    const BasisState s(n * m, gen.bits(n * m));
    const auto w = qhowe::row_col_weights(GridShape(n, m), s);
    int rows = 0;
    int cols = 0;
    for (int x : w.rows) rows += x;
    for (int x : w.cols) cols += x;
    CHECK(rows == std::popcount(s.bits()));
    CHECK(cols == std::popcount(s.bits()));
  }
}

TEST_CASE("grid rendering") {
  CHECK(qhowe::render_grid(GridShape(2, 2), BasisState::from_string("1110")) == "##\n#.\n");
  CHECK(qhowe::render_grid(GridShape(1, 3), BasisState::from_string("010")) == ".#.\n");
}

TEST_CASE("vector space axioms") {
  oracle::Gen gen(5);
  auto random_vector = [&](int n) {
    QVector v(n);
    const int terms = gen.integer(0, 5);
    for (int t = 0; t < terms; ++t) v.add(BasisState(n, gen.bits(n)), gen.laurent(3, 3));
    return v;
  };
  for (int t = 0; t < 200; ++t) {
    const QVector a = random_vector(5);
    const QVector b = random_vector(5);
    const QVector c = random_vector(5);
    const QLaurent x = gen.laurent(3, 3);
    const QLaurent y = gen.laurent(3, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(x * (a + b) == x * a + x * b);
    CHECK((x + y) * a == x * a + y * a);
    CHECK((a - a).is_zero());
    const QVector sum = a + b;
    for (const auto& [bits, coeff] : sum.entries()) CHECK_FALSE(coeff.is_zero());
  }
  QVector v(2);
  CHECK_THROWS_AS(v.add(BasisState::vacuum(3), 1), std::invalid_argument);
  CHECK_THROWS_AS((void)(QVector(2) + QVector(3)), std::invalid_argument);
}

TEST_CASE("vector JSON is sorted by state") {
  QVector v(3);
  v.add(BasisState::from_string("100"), QLaurent::q(1));
  v.add(BasisState::from_string("001"), 2);
  const nlohmann::json j = v;
  REQUIRE(j.size() == 2);
  CHECK(j[0]["state"] == "001");
  CHECK(j[1]["state"] == "100");
  CHECK(j[1]["coeff"] == nlohmann::json::parse(R"({"1":"1/1"})"));
}
