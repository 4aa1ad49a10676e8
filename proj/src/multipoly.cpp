// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "qhowe/duality.hpp"

namespace qhowe {

MultiPoly MultiPoly::constant(int vars, const Rational& c) {
  MultiPoly p(vars);
  p.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int vars, int k) {
  if (k < 0 || k >= vars) throw std::out_of_range("variable index");
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent length");
  if (qhowe::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (qhowe::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly MultiPoly::embed(int total, int offset) const {
  if (offset < 0 || offset + vars_ > total) throw std::invalid_argument("bad embedding");
  MultiPoly out(total);
  for (const auto& [e, c] : terms_) {
    Exponents big(static_cast<std::size_t>(total), 0);
    for (int k = 0; k < vars_; ++k) {
      big[static_cast<std::size_t>(k + offset)] = e[static_cast<std::size_t>(k)];
    }
    out.add_term(big, c);
  }
  return out;
}

void MultiPoly::check_vars(const MultiPoly& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      out += c == 1 ? mono : c.get_str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly schur_poly(const Partition& mu, int p) {
  if (p < 0 || mu.length() > p) throw std::invalid_argument("partition longer than variable count");
  MultiPoly out(p);
  const int rows = mu.length();
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) tab[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(mu.part(r + 1)), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < mu.part(r + 1); ++c) cells.emplace_back(r, c);
  }
  MultiPoly::Exponents content(static_cast<std::size_t>(p), 0);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.add_term(content, 1);
      return;
    }
    const auto [r, c] = cells[k];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[ur][uc - 1]);       // rows weakly increase
    if (r > 0) lo = std::max(lo, tab[ur - 1][uc] + 1);   // columns strictly increase
    for (int v = lo; v <= p; ++v) {
      tab[ur][uc] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, k + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
    tab[ur][uc] = 0;
  };
  fill(fill, 0);
  return out;
}

}  // namespace qhowe
