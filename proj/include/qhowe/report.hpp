// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Pass/fail records shared by every verifier.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhowe {

struct CheckResult {
  std::string relation;
  std::vector<int> indices;
  bool pass = false;
  /// Basis vector (or other locator) where the identity first fails.
  std::optional<std::string> witness;
  std::string detail;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add(std::string relation, std::vector<int> indices, bool pass,
           std::optional<std::string> witness = std::nullopt, std::string detail = {});
  /// Append all checks of another report, prefixing relation names.
  void absorb(const Report& other, const std::string& prefix = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<CheckResult>& checks() const { return checks_; }
  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t failures() const;

  /// Free-form payload merged into the JSON output.
  nlohmann::json extra = nlohmann::json::object();

  /// {"name", "status", "checks": [{"relation", "indices", "status", "witness"?}], ...extra}
  [[nodiscard]] nlohmann::json to_json() const;
  /// One summary line plus a line per failing check.
  [[nodiscard]] std::string to_text(bool verbose = false) const;

 private:
  std::string name_;
  std::vector<CheckResult> checks_;
};

}  // namespace qhowe
