// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/fockspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qhowe {

namespace {

std::uint64_t low_mask(int k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

}  // namespace

BasisState::BasisState(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxSites) {
    throw std::invalid_argument("state length must be in [0, 64]");
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw std::invalid_argument("state bits exceed length");
  }
}

BasisState BasisState::from_string(std::string_view s) {
  if (s.size() > static_cast<std::size_t>(kMaxSites)) {
    throw std::invalid_argument("state longer than 64 sites");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1') {
      bits |= std::uint64_t{1} << k;
    } else if (s[k] != '0') {
      throw std::invalid_argument("state must be a 0/1 string: " + std::string(s));
    }
  }
  return {static_cast<int>(s.size()), bits};
}

void BasisState::check_position(int k) const {
  if (k < 1 || k > length_) {
    throw std::out_of_range("site " + std::to_string(k) + " outside 1.." +
                            std::to_string(length_));
  }
}

bool BasisState::occupied(int k) const {
  check_position(k);
  return (bits_ >> (k - 1)) & 1U;
}

BasisState BasisState::with_occupied(int k) const {
  check_position(k);
  return {length_, bits_ | (std::uint64_t{1} << (k - 1))};
}

BasisState BasisState::with_vacant(int k) const {
  check_position(k);
  return {length_, bits_ & ~(std::uint64_t{1} << (k - 1))};
}

int BasisState::degree() const { return std::popcount(bits_); }

std::string BasisState::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int k = 0; k < length_; ++k) {
    if ((bits_ >> k) & 1U) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

int prefix_parity(const BasisState& s, int k) {
  if (k < 1 || k > s.length() + 1) throw std::out_of_range("prefix position out of range");
  return std::popcount(s.bits() & low_mask(k - 1));
}

GridShape::GridShape(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || m < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (n * m > kMaxSites) throw std::invalid_argument("grid has more than 64 cells");
}

int GridShape::linear(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > m) {
    throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside grid");
  }
  return i + (j - 1) * n;
}

std::pair<int, int> GridShape::cell(int k) const {
  if (k < 1 || k > sites()) throw std::out_of_range("site outside grid");
  return {(k - 1) % n + 1, (k - 1) / n + 1};
}

GridWeights row_col_weights(const GridShape& shape, const BasisState& s) {
  if (s.length() != shape.sites()) throw std::invalid_argument("state length != n*m");
  GridWeights w{std::vector<int>(static_cast<std::size_t>(shape.n), 0),
                std::vector<int>(static_cast<std::size_t>(shape.m), 0)};
  for (int k = 1; k <= shape.sites(); ++k) {
    if (!s.occupied(k)) continue;
    auto [i, j] = shape.cell(k);
    ++w.rows[static_cast<std::size_t>(i - 1)];
    ++w.cols[static_cast<std::size_t>(j - 1)];
  }
  return w;
}

std::string render_grid(const GridShape& shape, const BasisState& s) {
  if (s.length() != shape.sites()) throw std::invalid_argument("state length != n*m");
  std::string out;
  for (int i = 1; i <= shape.n; ++i) {
    for (int j = 1; j <= shape.m; ++j) out += s.occupied(shape.linear(i, j)) ? '#' : '.';
    out += '\n';
  }
  return out;
}

QVector::QVector(int length) : length_(length) {
  if (length < 0 || length > kMaxSites) throw std::invalid_argument("bad vector length");
}

QVector QVector::basis(const BasisState& s, const QLaurent& coeff) {
  QVector v(s.length());
  v.add(s, coeff);
  return v;
}

void QVector::check_length(const BasisState& s) const {
  if (s.length() != length_) throw std::invalid_argument("state length mismatch");
}

QLaurent QVector::coeff(const BasisState& s) const {
  check_length(s);
  auto it = entries_.find(s.bits());
  return it == entries_.end() ? QLaurent{} : it->second;
}

void QVector::add(const BasisState& s, const QLaurent& coeff) {
  check_length(s);
  if (coeff.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(s.bits(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

QVector& QVector::operator+=(const QVector& o) {
  if (o.length_ != length_) throw std::invalid_argument("vector length mismatch");
  for (const auto& [bits, c] : o.entries_) add(BasisState(length_, bits), c);
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (o.length_ != length_) throw std::invalid_argument("vector length mismatch");
  for (const auto& [bits, c] : o.entries_) add(BasisState(length_, bits), -c);
  return *this;
}

QVector& QVector::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [bits, v] : entries_) v *= c;
  return *this;
}

std::string QVector::to_string() const {
  if (entries_.empty()) return "0";
  std::vector<std::pair<std::string, const QLaurent*>> items;
  for (const auto& [bits, c] : entries_) {
    items.emplace_back(BasisState(length_, bits).to_string(), &c);
  }
  std::sort(items.begin(), items.end());
  std::string out;
  for (const auto& [state, c] : items) {
    if (!out.empty()) out += " + ";
    out += "(" + c->to_string() + ") v(" + state + ")";
  }
  return out;
}

void to_json(nlohmann::json& j, const QVector& v) {
  std::vector<std::pair<std::string, nlohmann::json>> items;
  for (const auto& [bits, c] : v.entries()) {
    items.emplace_back(BasisState(v.length(), bits).to_string(), nlohmann::json(c));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  j = nlohmann::json::array();
  for (auto& [state, coeff] : items) {
    j.push_back({{"state", state}, {"coeff", std::move(coeff)}});
  }
}

}  // namespace qhowe
