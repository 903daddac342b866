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
 * Named machine-checked facts.  Every construction in the library returns,
 * next to its object, a CheckList re-verifying the structural claims it is
 * supposed to satisfy; reports render these lists as-is, so a claim that
 * fails stays visibly red instead of being silently dropped.
 */

#include <string>
#include <vector>

namespace supergrade {

struct Check {
  std::string name;
  bool ok = false;
  std::string note;  // witness or quantitative detail
};

class CheckList {
 public:
  void add(std::string name, bool ok, std::string note = "") {
    items_.push_back({std::move(name), ok, std::move(note)});
  }

  const std::vector<Check> &items() const { return items_; }

  bool all_ok() const {
    for (const auto &c : items_)
      if (!c.ok) return false;
    return true;
  }

  const Check *find(const std::string &name) const {
    for (const auto &c : items_)
      if (c.name == name) return &c;
    return nullptr;
  }

  /** "7/7 ok" or "5/7 ok; failing: a, b". */
  std::string summary() const {
    std::size_t ok = 0;
    std::string failing;
    for (const auto &c : items_) {
      if (c.ok) {
        ++ok;
      } else {
        failing += failing.empty() ? c.name : ", " + c.name;
      }
    }
    std::string s = std::to_string(ok) + "/" + std::to_string(items_.size()) + " ok";
    if (!failing.empty()) s += "; failing: " + failing;
    return s;
  }

 private:
  std::vector<Check> items_;
};

}  // namespace supergrade
