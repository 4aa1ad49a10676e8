// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Occupation-number basis of the exterior algebra on N sites, vectors over
// Q(q), and the n x m grid that indexes sites in column-major order.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qhowe/qscalar.hpp"

namespace qhowe {

inline constexpr int kMaxSites = 64;

/// v(l_1 ... l_N). Position k (1-based) is bit k-1.
class BasisState {
 public:
  BasisState() = default;
  BasisState(int length, std::uint64_t bits);

  /// "0101" with position 1 on the left.
  [[nodiscard]] static BasisState from_string(std::string_view s);
  [[nodiscard]] static BasisState vacuum(int length) { return {length, 0}; }

  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool occupied(int k) const;
  [[nodiscard]] BasisState with_occupied(int k) const;
  [[nodiscard]] BasisState with_vacant(int k) const;
  [[nodiscard]] int degree() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BasisState&, const BasisState&) = default;
  friend auto operator<=>(const BasisState&, const BasisState&) = default;

 private:
  void check_position(int k) const;

  int length_ = 0;
  std::uint64_t bits_ = 0;
};

/// l_1 + ... + l_{k-1}
[[nodiscard]] int prefix_parity(const BasisState& s, int k);

struct GridShape {
  int n;
  int m;

  GridShape(int n, int m);
  [[nodiscard]] int sites() const { return n * m; }
  /// k = i + (j-1) n
  [[nodiscard]] int linear(int i, int j) const;
  /// (i, j) of site k
  [[nodiscard]] std::pair<int, int> cell(int k) const;
};

struct GridWeights {
  std::vector<int> rows;  // length n
  std::vector<int> cols;  // length m
};

[[nodiscard]] GridWeights row_col_weights(const GridShape& shape, const BasisState& s);

/// n lines of m characters, '#' for an occupied cell and '.' otherwise.
[[nodiscard]] std::string render_grid(const GridShape& shape, const BasisState& s);

class QVector {
 public:
  QVector() = default;
  explicit QVector(int length);

  [[nodiscard]] static QVector basis(const BasisState& s, const QLaurent& coeff = 1);

  [[nodiscard]] int length() const { return length_; }
  /// Keyed by BasisState::bits(); zero coefficients never stored.
  [[nodiscard]] const std::map<std::uint64_t, QLaurent>& entries() const { return entries_; }
  [[nodiscard]] QLaurent coeff(const BasisState& s) const;
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  void add(const BasisState& s, const QLaurent& coeff);

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const QLaurent& c);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const QLaurent& c, QVector v) { return v *= c; }
  friend bool operator==(const QVector&, const QVector&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void check_length(const BasisState& s) const;

  int length_ = 0;
  std::map<std::uint64_t, QLaurent> entries_;
};

/// [{"state": "0101", "coeff": {...}}, ...] sorted by state string.
void to_json(nlohmann::json& j, const QVector& v);

}  // namespace qhowe
