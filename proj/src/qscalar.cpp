// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/qscalar.hpp"

#include <algorithm>
#include <limits>

namespace qhowe {

namespace {

int checked_add(int a, int b) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("q-exponent overflow");
  }
  return out;
}

// Merge a term list that may be unsorted, with repeats and zeros.
std::vector<QLaurent::Term> canonical(std::vector<QLaurent::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<QLaurent::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return out;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: " + s);
  }
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& r, int e) {
  if (e < 0) {
    if (is_zero(r)) throw std::domain_error("zero to a negative power");
    if (e == std::numeric_limits<int>::min()) throw std::overflow_error("exponent overflow");
    return rational_pow(Rational(1 / r), -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

QLaurent::QLaurent(long c) : QLaurent(Rational(c)) {}

QLaurent::QLaurent(const Rational& c) {
  if (!qhowe::is_zero(c)) terms_.emplace_back(0, c);
}

QLaurent QLaurent::monomial(const Rational& c, int exponent) {
  QLaurent p;
  if (!qhowe::is_zero(c)) p.terms_.emplace_back(exponent, c);
  return p;
}

QLaurent QLaurent::q(int exponent) { return monomial(1, exponent); }

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational QLaurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int QLaurent::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.front().first;
}

int QLaurent::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.back().first;
}

QLaurent QLaurent::shifted(int e) const {
  QLaurent p = *this;
  for (auto& t : p.terms_) t.first = checked_add(t.first, e);
  return p;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (!qhowe::is_zero(s)) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent p;
  if (a.terms_.empty() || b.terms_.empty()) return p;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    p.terms_.emplace_back(checked_add(a.terms_[0].first, b.terms_[0].first),
                          a.terms_[0].second * b.terms_[0].second);
    return p;
  }
  std::vector<QLaurent::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod.emplace_back(checked_add(ea, eb), ca * cb);
    }
  }
  p.terms_ = canonical(std::move(prod));
  return p;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = e == 1 ? "q" : "q^" + std::to_string(e);
    if (e == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out;
}

QLaurent exact_div(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div by zero");
  if (num.is_zero()) return {};
  if (den.is_monomial()) {
    const auto& [de, dc] = den.terms()[0];
    QLaurent out;
    for (const auto& [e, c] : num.terms()) {
      out += QLaurent::monomial(c / dc, checked_add(e, -de));
    }
    return out;
  }
  // Shift both to ordinary polynomials with nonzero constant term in den;
  // den then divides num in Q[q, q^-1] iff it does so in Q[q].
  int nmin = num.min_exponent();
  int dmin = den.min_exponent();
  std::vector<Rational> n(static_cast<std::size_t>(num.max_exponent() - nmin + 1));
  std::vector<Rational> d(static_cast<std::size_t>(den.max_exponent() - dmin + 1));
  for (const auto& [e, c] : num.terms()) n[static_cast<std::size_t>(e - nmin)] = c;
  for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e - dmin)] = c;
  if (n.size() < d.size()) {
    throw NonExactDivision("(" + num.to_string() + ") / (" + den.to_string() + ")");
  }
  std::vector<Rational> quot(n.size() - d.size() + 1);
  const Rational& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = n[k + d.size() - 1] / lead;
    quot[k] = c;
    if (qhowe::is_zero(c)) continue;
    for (std::size_t t = 0; t < d.size(); ++t) n[k + t] -= c * d[t];
  }
  for (const auto& r : n) {
    if (!qhowe::is_zero(r)) {
      throw NonExactDivision("(" + num.to_string() + ") / (" + den.to_string() + ")");
    }
  }
  QLaurent out;
  int shift = checked_add(nmin, -dmin);
  for (std::size_t k = 0; k < quot.size(); ++k) {
    out += QLaurent::monomial(quot[k], checked_add(shift, static_cast<int>(k)));
  }
  return out;
}

QLaurent q_int(int k) {
  if (k < 0) throw std::invalid_argument("q_int needs k >= 0");
  QLaurent out;
  for (int t = 0; t < k; ++t) out += QLaurent::q(k - 1 - 2 * t);
  return out;
}

QLaurent q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial needs k >= 0");
  QLaurent out = 1;
  for (int t = 2; t <= k; ++t) out *= q_int(t);
  return out;
}

QLaurent q_binomial(int a, int b) {
  if (b < 0 || b > a) throw std::invalid_argument("q_binomial needs 0 <= b <= a");
  return exact_div(q_factorial(a), q_factorial(b) * q_factorial(a - b));
}

Rational specialize(const QLaurent& p, const Rational& value) {
  if (is_zero(value)) throw std::invalid_argument("specialize at q = 0");
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) out += c * rational_pow(value, e);
  return out;
}

void to_json(nlohmann::json& j, const QLaurent& p) {
  j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_to_string(c);
}

void from_json(const nlohmann::json& j, QLaurent& p) {
  if (!j.is_object()) throw std::invalid_argument("QLaurent JSON must be an object");
  QLaurent out;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    out += QLaurent::monomial(rational_from_string(value.get<std::string>()), e);
  }
  p = std::move(out);
}

}  // namespace qhowe
