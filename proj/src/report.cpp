// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhowe/report.hpp"

#include <algorithm>

namespace qhowe {

namespace {

std::string indices_text(const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(idx[k]);
  }
  return out + ")";
}

}  // namespace

void Report::add(std::string relation, std::vector<int> indices, bool pass,
                 std::optional<std::string> witness, std::string detail) {
  checks_.push_back(
      {std::move(relation), std::move(indices), pass, std::move(witness), std::move(detail)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (CheckResult r : other.checks_) {
    if (!prefix.empty()) r.relation = prefix + r.relation;
    checks_.push_back(std::move(r));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& r) { return r.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const CheckResult& r) { return !r.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : checks_) {
    nlohmann::json c = {{"relation", r.relation},
                        {"indices", r.indices},
                        {"status", r.pass ? "pass" : "fail"}};
    if (r.witness) c["witness"] = *r.witness;
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  nlohmann::json j = {{"name", name_}, {"status", passed() ? "pass" : "fail"}, {"checks", checks}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

std::string Report::to_text(bool verbose) const {
  std::string out = (passed() ? "PASS " : "FAIL ") + name_ + "  [" +
                    std::to_string(checks_.size() - failures()) + "/" +
                    std::to_string(checks_.size()) + " checks]\n";
  for (const auto& r : checks_) {
    if (r.pass && !verbose) continue;
    out += std::string(r.pass ? "  ok   " : "  FAIL ") + r.relation + indices_text(r.indices);
    if (r.witness) out += "  witness " + *r.witness;
    if (!r.detail.empty()) out += "  " + r.detail;
    out += "\n";
  }
  return out;
}

}  // namespace qhowe
