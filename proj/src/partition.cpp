// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qhowe/duality.hpp"

namespace qhowe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("bad partition part: " + item);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("partition index starts at 1");
  return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  const int top = parts_.empty() ? 0 : parts_[0];
  for (int j = 1; j <= top; ++j) {
    int c = 0;
    for (int p : parts_) c += p >= j ? 1 : 0;
    conj.push_back(c);
  }
  return Partition(std::move(conj));
}

bool Partition::fits_in_box(int n, int m) const { return length() <= n && part(1) <= m; }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::vector<Partition> partitions_in_box(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("box dimensions must be positive");
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  // parts in decreasing order, each at most the previous one
  auto rec = [&](auto&& self, int max_part) -> void {
    all.push_back(cur);
    if (static_cast<int>(cur.size()) == n) return;
    for (int v = 1; v <= max_part; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, m);
  std::vector<Partition> out;
  for (auto& p : all) out.emplace_back(std::move(p));
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

}  // namespace qhowe
