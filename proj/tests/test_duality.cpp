// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "oracle.hpp"
#include "qhowe/braided_ext.hpp"
#include "qhowe/duality.hpp"
#include "qhowe/embeddings.hpp"

using namespace qhowe;

namespace {

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Weyl dimension by counting semistandard tableaux directly.
long ssyt_count(const Partition& mu, int p) {
  long total = 0;
  const MultiPoly s = schur_poly(mu, p);
  for (const auto& [e, c] : s.terms()) total += c.get_num().get_si();
  return total;
}

std::vector<long> span_dims(const nlohmann::json& extra) {
  std::vector<long> out;
  for (const auto& row : extra.at("partitions")) out.push_back(row.at("span_dim").get<long>());
  return out;
}

}  // namespace

TEST_CASE("partitions in a box") {
  CHECK(names(partitions_in_box(2, 2)) ==
        std::vector<std::string>{"()", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"});
  CHECK(partitions_in_box(1, 2).size() == 3);
  CHECK(partitions_in_box(2, 3).size() == 10);
  CHECK(partitions_in_box(3, 3).size() == 20);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const auto ps = partitions_in_box(n, m);
      CHECK(static_cast<long>(ps.size()) == binomial(n + m, n));
      for (const auto& p : ps) {
        CHECK(p.fits_in_box(n, m));
        CHECK(p.conjugate().fits_in_box(m, n));
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
      }
    }
  }
  CHECK(Partition::parse("3,1,1").conjugate() == Partition({3, 1, 1}));
  CHECK(Partition::parse("4,2").conjugate() == Partition({2, 2, 1, 1}));
  CHECK(Partition::parse("").length() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition({2, 0}) == Partition({2}));
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS((void)Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("highest-weight vectors") {
  const GridShape g(2, 2);
  CHECK(hwv(Partition({2, 1}), g, Flavor::Quantum) == QVector::basis(BasisState::from_string("1110")));
  CHECK(render_grid(g, young_state(Partition({2, 1}), g)) == "##\n#.\n");
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n * m <= 9; ++m) {
      const GridShape shape(n, m);
      for (const auto& mu : partitions_in_box(n, m)) {
        CAPTURE(mu.to_string());
        const Report q = verify_hwv(mu, shape, Flavor::Quantum);
        const Report c = verify_hwv(mu, shape, Flavor::Classical);
        CHECK_MESSAGE(q.passed(), q.to_text());
        CHECK_MESSAGE(c.passed(), c.to_text());
      }
    }
  }
  // only cell (1, 2) occupied: rho_q(E_1) moves it left
  const QVector stray = QVector::basis(BasisState::from_string("0010"));
  const Report bad = verify_hwv_vector(stray, Partition({1}), g, Flavor::Quantum);
  CHECK_FALSE(bad.passed());
  const auto it = std::find_if(bad.checks().begin(), bad.checks().end(),
                               [](const CheckResult& c) { return !c.pass; });
  REQUIRE(it != bad.checks().end());
  CHECK(it->relation == "rho_E_kills");
  CHECK(it->witness.value() == "rho_q(E_1) at 1000");
  CHECK_THROWS_AS((void)verify_hwv(Partition({3}), g, Flavor::Quantum), std::invalid_argument);
}

TEST_CASE("hwv is the row-by-row wedge product up to a unit") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n * m <= 9; ++m) {
      const GridShape shape(n, m);
      for (const auto& mu : partitions_in_box(n, m)) {
        CAPTURE(mu.to_string());
        // v_{11} v_{12} .. v_{1 mu_1} v_{21} ..: sites in row-major order
        std::vector<int> sites;
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= mu.part(i); ++j) sites.push_back(shape.linear(i, j));
        }
        QVector product = QVector::basis(BasisState::vacuum(shape.sites()));
        for (int k : sites) product = mul(product, QVector::basis(BasisState::vacuum(shape.sites()).with_occupied(k)));
        int inversions = 0;
        for (std::size_t a = 0; a < sites.size(); ++a) {
          for (std::size_t b = a + 1; b < sites.size(); ++b) inversions += sites[a] > sites[b] ? 1 : 0;
        }
        const QLaurent unit = QLaurent::monomial(inversions % 2 ? -1 : 1, -inversions);
        CHECK(product == unit * hwv(mu, shape, Flavor::Quantum));
      }
    }
  }
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(Partition({1}), 3) == 3);
  CHECK(weyl_dim(Partition({2}), 2) == 3);
  CHECK(weyl_dim(Partition({1, 1}), 3) == 3);
  CHECK(weyl_dim(Partition({2, 1}), 3) == 8);
  CHECK(weyl_dim(Partition({2, 2}), 2) == 1);
  CHECK(weyl_dim(Partition(), 4) == 1);
  for (int p = 1; p <= 4; ++p) {
    for (const auto& mu : partitions_in_box(p, 3)) {
      CHECK(weyl_dim(mu, p) == ssyt_count(mu, p));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const Report r = dimension_identity(n, m);
      CHECK_MESSAGE(r.passed(), r.to_text());
    }
  }
}

TEST_CASE("cyclic span dimensions") {
  const std::vector<Rational> qs{2, 3};
  const Report r22 = cyclic_span_dims(2, 2, qs);
  CHECK_MESSAGE(r22.passed(), r22.to_text());
  CHECK(span_dims(r22.extra) == std::vector<long>{1, 4, 3, 3, 4, 1});
  CHECK(r22.extra.at("total") == 16);

  const Report r12 = cyclic_span_dims(1, 2, qs);
  CHECK(span_dims(r12.extra) == std::vector<long>{1, 2, 1});

  const Report r23 = cyclic_span_dims(2, 3, qs);
  CHECK(r23.passed());
  const auto d23 = span_dims(r23.extra);
  CHECK(d23.size() == 10);
  long sum = 0;
  for (long d : d23) sum += d;
  CHECK(sum == 64);

  const Report r = cyclic_span_dims(3, 3, {Rational(5, 2)});
  CHECK(r.passed());
  CHECK(r.extra.at("status") == "pass");
  CHECK(r.to_json().at("status") == "pass");

  CHECK_THROWS_AS((void)cyclic_span_dims(2, 2, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS((void)cyclic_span_dims(2, 2, {Rational(-1)}), std::invalid_argument);
  CHECK_THROWS_AS((void)cyclic_span_dims(2, 2, {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS((void)cyclic_span_dims(3, 6, qs), CapExceeded);
  CHECK_THROWS_AS((void)cyclic_span_dims(3, 3, qs, 8), CapExceeded);
}

TEST_CASE("Schur polynomials") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  CHECK(schur_poly(Partition({1}), 2) == x1 + x2);
  CHECK(schur_poly(Partition({1, 1}), 2) == x1 * x2);
  CHECK(schur_poly(Partition({2}), 2) == x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(schur_poly(Partition({2, 1}), 2) == x1 * x1 * x2 + x1 * x2 * x2);
  CHECK(schur_poly(Partition(), 3) == MultiPoly::constant(3, 1));
  CHECK_THROWS_AS((void)schur_poly(Partition({1, 1, 1}), 2), std::invalid_argument);
  // symmetric under swapping variables
  for (const auto& mu : partitions_in_box(3, 3)) {
    const MultiPoly s = schur_poly(mu, 3);
    MultiPoly swapped(3);
    for (const auto& [e, c] : s.terms()) swapped.add_term({e[1], e[0], e[2]}, c);
    CHECK(swapped == s);
  }
}

TEST_CASE("dual Cauchy identity") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const Report r = dual_cauchy_check(n, m);
      CHECK_MESSAGE(r.passed(), r.to_text());
    }
  }
}

TEST_CASE("multiplicity-free decomposition") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n * m <= 9; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const Report r = multiplicity_free_check(n, m, 2);
      CHECK_MESSAGE(r.passed(), r.to_text());
    }
  }
}

TEST_CASE("highest-weight bounds") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; n * m <= 9; ++m) {
      const Report r = hw_bounds_check(n, m);
      CHECK_MESSAGE(r.passed(), r.to_text());
    }
  }
}

TEST_CASE("fundamental representations in the exterior algebra") {
  for (int n = 1; n <= 6; ++n) {
    const Report r = fundamental_decomp(n);
    CHECK_MESSAGE(r.passed(), r.to_text());
  }
}

TEST_CASE("MultiPoly arithmetic") {
  oracle::Gen gen(11);
  auto random_poly = [&gen]() {
    MultiPoly p(2);
    for (int t = gen.integer(0, 4); t > 0; --t) p.add_term({gen.integer(0, 3), gen.integer(0, 3)}, gen.rational());
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    const MultiPoly a = random_poly();
    const MultiPoly b = random_poly();
    const MultiPoly c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
  CHECK(MultiPoly::variable(1, 0).embed(3, 2) == MultiPoly::variable(3, 2));
  CHECK_THROWS_AS((void)(MultiPoly(2) + MultiPoly(3)), std::invalid_argument);
}
