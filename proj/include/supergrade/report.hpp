// Copyright the supergrade developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * Machine-readable run reports.  Every command produces one Report; the JSON
 * rendering is byte-deterministic (fixed field order, ordered keys, no
 * timestamps or timing), so identical inputs give identical bytes.  Timing
 * belongs to the text rendering only.
 *
 * Invariant: a report with evidence_kind "bounded" must state the size of the
 * family it searched (counts entry "family_size"); serialization refuses
 * otherwise.  Bounded evidence can falsify a claim, never prove it.
 */

#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "supergrade/checks.hpp"

namespace supergrade {

inline constexpr const char *kReportSpecVersion = "1.0";

struct Report {
  std::string spec_version = kReportSpecVersion;
  std::string claim;     // entry in the tool's claim catalog, e.g. "Thm5.2"
  std::string instance;  // canonical spec text of the object examined
  std::string verdict;   // "pass" | "fail"
  std::string evidence_kind = "exact";  // "exact" | "bounded"
  CheckList checks;
  std::vector<std::pair<std::string, long long>> counts;  // insertion-ordered
  std::map<std::string, long> per_degree;                 // keyed by rendered degree
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return verdict == "pass"; }

  void count(const std::string &key, long long value) { counts.emplace_back(key, value); }

  const long long *find_count(const std::string &key) const {
    for (const auto &[k, v] : counts)
      if (k == key) return &v;
    return nullptr;
  }
};

inline nlohmann::ordered_json report_to_json_object(const Report &r) {
  if (r.evidence_kind == "bounded" && !r.find_count("family_size"))
    throw std::logic_error("bounded evidence requires counts[\"family_size\"]");
  nlohmann::ordered_json j;
  j["spec_version"] = r.spec_version;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["verdict"] = r.verdict;
  j["evidence_kind"] = r.evidence_kind;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check &c : r.checks.items()) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json counts;
  for (const auto &[k, v] : r.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  if (!r.per_degree.empty()) {
    nlohmann::ordered_json pd;
    for (const auto &[k, v] : r.per_degree) pd[k] = v;
    j["per_degree"] = std::move(pd);
  }
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline std::string report_to_json(const Report &r) {
  return report_to_json_object(r).dump(2) + "\n";
}

/** Human rendering; pass elapsed seconds to append a timing line. */
inline std::string report_to_text(const Report &r, std::optional<double> seconds = {}) {
  std::string out;
  out += "claim:    " + (r.claim.empty() ? std::string("-") : r.claim) + "\n";
  if (!r.instance.empty()) out += "instance: " + r.instance + "\n";
  out += "verdict:  " + r.verdict + " (" + r.evidence_kind + " evidence)\n";
  if (!r.checks.items().empty()) {
    out += "checks:   " + r.checks.summary() + "\n";
    for (const Check &c : r.checks.items()) {
      out += "  [" + std::string(c.ok ? "ok" : "FAIL") + "] " + c.name;
      if (!c.note.empty()) out += " (" + c.note + ")";
      out += "\n";
    }
  }
  for (const auto &[k, v] : r.counts) out += "count " + k + " = " + std::to_string(v) + "\n";
  if (!r.per_degree.empty()) {
    out += "per-degree dims:\n";
    for (const auto &[k, v] : r.per_degree) out += "  " + k + ": " + std::to_string(v) + "\n";
  }
  for (const auto &w : r.witnesses) out += "witness: " + w + "\n";
  for (const auto &n : r.notes) out += "note: " + n + "\n";
  if (seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "elapsed:  %.3fs\n", *seconds);
    out += buf;
  }
  return out;
}

}  // namespace supergrade
