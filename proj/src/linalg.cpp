// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/linalg.hpp"

namespace qhowe {

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->row < y->row)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->row < x->row) {
      out.push_back({y->row, -c * y->value});
      ++y;
    } else {
      Rational v = x->value - c * y->value;
      if (!is_zero(v)) out.push_back({x->row, std::move(v)});
      ++x;
      ++y;
    }
  }
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  while (!v.empty()) {
    auto it = pivots_.find(v.front().row);
    if (it == pivots_.end()) break;
    const Rational c = v.front().value;
    v = axpy(v, c, it->second);
  }
  // leading entry is now free of pivots; later entries may still meet
  // pivots, which does not matter for membership or rank
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.front().value;
  for (auto& e : v) e.value /= lead;
  const std::size_t key = v.front().row;
  pivots_.emplace(key, std::move(v));
  return true;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::size_t matrix_rank(const RMatrix& m) {
  Echelon e;
  for (std::size_t j = 0; j < m.dim(); ++j) e.insert(m.column(j));
  return e.rank();
}

}  // namespace qhowe
