// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Square sparse matrices stored by column, over Rational or QLaurent.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "qhowe/qscalar.hpp"

namespace qhowe {

template <class Scalar>
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : dim_(dim), cols_(dim) {}

  [[nodiscard]] static SparseMatrix identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) m.cols_[j].push_back({j, Scalar(1)});
    return m;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Column& column(std::size_t j) const { return cols_.at(j); }

  /// Accepts unsorted entries with repeats; they are summed.
  void set_column(std::size_t j, Column col) {
    for (const auto& e : col) {
      if (e.row >= dim_) throw std::out_of_range("row index outside matrix");
    }
    cols_.at(j) = normalize(std::move(col));
  }

  [[nodiscard]] Scalar at(std::size_t i, std::size_t j) const {
    const Column& c = cols_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == i) return it->value;
    return Scalar(0);
  }

  [[nodiscard]] std::size_t nnz() const {
    std::size_t total = 0;
    for (const auto& c : cols_) total += c.size();
    return total;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
  }

  /// Matrix times a sparse column vector.
  [[nodiscard]] Column apply(const Column& v) const {
    Column acc;
    for (const auto& [k, b] : v) {
      for (const auto& [i, a] : cols_.at(k)) acc.push_back({i, a * b});
    }
    return normalize(std::move(acc));
  }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    check_same(o);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (o.cols_[j].empty()) continue;
      Column c = cols_[j];
      c.insert(c.end(), o.cols_[j].begin(), o.cols_[j].end());
      cols_[j] = normalize(std::move(c));
    }
    return *this;
  }

  SparseMatrix& operator-=(const SparseMatrix& o) { return *this += Scalar(-1) * o; }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  friend SparseMatrix operator*(const Scalar& s, SparseMatrix a) {
    if (qhowe::is_zero(s)) return SparseMatrix(a.dim_);
    for (auto& c : a.cols_) {
      for (auto& e : c) e.value = s * e.value;
    }
    return a;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.check_same(b);
    SparseMatrix out(a.dim_);
    for (std::size_t j = 0; j < a.dim_; ++j) out.cols_[j] = a.apply(b.cols_[j]);
    return out;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  /// First column where the two matrices differ.
  [[nodiscard]] std::optional<std::size_t> first_difference(const SparseMatrix& o) const {
    check_same(o);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!(cols_[j] == o.cols_[j])) return j;
    }
    return std::nullopt;
  }

  template <class F>
  [[nodiscard]] auto map(F f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    SparseMatrix<Out> out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      typename SparseMatrix<Out>::Column c;
      c.reserve(cols_[j].size());
      for (const auto& e : cols_[j]) c.push_back({e.row, f(e.value)});
      out.set_column(j, std::move(c));
    }
    return out;
  }

  [[nodiscard]] static Column normalize(Column c) {
    std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column out;
    out.reserve(c.size());
    for (auto& e : c) {
      if (!out.empty() && out.back().row == e.row) {
        out.back().value += e.value;
      } else {
        if (!out.empty() && qhowe::is_zero(out.back().value)) out.pop_back();
        out.push_back(std::move(e));
      }
    }
    if (!out.empty() && qhowe::is_zero(out.back().value)) out.pop_back();
    return out;
  }

 private:
  void check_same(const SparseMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Column> cols_;
};

/// A acts on the first tensor factor: basis index a + dim(A) * b.
template <class Scalar>
[[nodiscard]] SparseMatrix<Scalar> kron(const SparseMatrix<Scalar>& a,
                                        const SparseMatrix<Scalar>& b) {
  const std::size_t da = a.dim();
  SparseMatrix<Scalar> out(da * b.dim());
  for (std::size_t jb = 0; jb < b.dim(); ++jb) {
    for (std::size_t ja = 0; ja < da; ++ja) {
      typename SparseMatrix<Scalar>::Column c;
      for (const auto& eb : b.column(jb)) {
        for (const auto& ea : a.column(ja)) {
          c.push_back({ea.row + da * eb.row, ea.value * eb.value});
        }
      }
      out.set_column(ja + da * jb, std::move(c));
    }
  }
  return out;
}

using QMatrix = SparseMatrix<QLaurent>;
using RMatrix = SparseMatrix<Rational>;

[[nodiscard]] inline RMatrix specialize(const QMatrix& m, const Rational& value) {
  return m.map([&](const QLaurent& p) { return specialize(p, value); });
}

}  // namespace qhowe
