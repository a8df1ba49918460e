// Copyright 2026 The Narrate Authors.
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

#include "narrate/kb/roles.h"

#include <algorithm>

#include "narrate/common/text.h"

namespace narrate::kb {
namespace {

constexpr const char* kEntity = "entity";

struct RoleGroup {
  const char* sort;
  std::vector<const char*> roles;
};

const std::vector<RoleGroup>& Groups() {
  static const auto* groups = new std::vector<RoleGroup>{
      {"living_entity",
       {"Actor", "Agent", "Beneficiary", "Cause", "Co-Agent", "Co-Theme", "Recipient",
        "Experiencer", "Participant", "Patient", "Theme", "Undergoer"}},
      {"place", {"Location", "Place"}},
      {"spatial_entity", {"Destination", "Initial_location", "Source"}},
      {"entity",
       {"Instrument", "Material", "Pivot", "Product", "Duration", "Stimulus", "Time", "Extent",
        "Trajectory", "Initial_time", "Topic", "Value", "Goal", "Result", "Attribute",
        "Final_time", "Frequency"}},
  };
  return *groups;
}

}  // namespace

std::string NormalizeRole(std::string_view role) {
  std::string out = ToLower(role);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

std::string RoleAttribute(std::string_view role) { return "vn_" + NormalizeRole(role); }

const RoleSortTable& RoleSortTable::Default() {
  static const RoleSortTable* table = [] {
    auto* t = new RoleSortTable;
    for (const auto& g : Groups()) {
      for (const char* r : g.roles) t->role_to_sort_[NormalizeRole(r)] = g.sort;
    }
    return t;
  }();
  return *table;
}

int RoleSortTable::Priority(std::string_view sort) {
  if (sort == "living_entity") return 3;
  if (sort == "place") return 2;
  if (sort == "spatial_entity") return 1;
  if (sort == kEntity) return 0;
  return -1;
}

std::string RoleSortTable::SortForRole(std::string_view role) const {
  auto it = role_to_sort_.find(NormalizeRole(role));
  return it == role_to_sort_.end() ? kEntity : it->second;
}

std::string RoleSortTable::ParentSortForRoles(const std::vector<std::string>& roles) const {
  std::string best = kEntity;
  for (const auto& r : roles) {
    std::string s = SortForRole(r);
    if (Priority(s) > Priority(best)) best = s;
  }
  return best;
}

}  // namespace narrate::kb
