// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Exact rank computations over Q with sparse vectors.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qhowe/sparse_matrix.hpp"

namespace qhowe {

/// Sorted by index, no zeros; same layout as a matrix column.
using SparseVec = RMatrix::Column;

/// Incrementally grown row-echelon basis of a subspace of Q^N.
class Echelon {
 public:
  /// Adds v if it is independent of the current basis; returns whether it was.
  bool insert(SparseVec v);
  /// v minus its projection along the pivots (zero iff v is in the span).
  [[nodiscard]] SparseVec reduce(SparseVec v) const;
  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseVec> pivots_;  // leading index -> row with leading 1
};

/// a - c * b
[[nodiscard]] SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);

[[nodiscard]] std::size_t rank_of(const std::vector<SparseVec>& vectors);
/// Column rank.
[[nodiscard]] std::size_t matrix_rank(const RMatrix& m);

}  // namespace qhowe
