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

#ifndef NARRATE_KB_ROLES_H_
#define NARRATE_KB_ROLES_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace narrate::kb {

// Maps thematic roles to the four entity parent sorts.
class RoleSortTable {
 public:
  // The standard table.
  static const RoleSortTable& Default();

  // Parent sort of a single role; unknown roles map to entity. Role names
  // compare case-insensitively with '-' and '_' treated alike.
  std::string SortForRole(std::string_view role) const;

  // Highest-priority sort among the roles; entity for an empty list.
  std::string ParentSortForRoles(const std::vector<std::string>& roles) const;

  // living_entity > place > spatial_entity > entity; -1 for other sorts.
  static int Priority(std::string_view sort);

  // Normalized role name -> sort.
  const std::map<std::string, std::string>& entries() const { return role_to_sort_; }

 private:
  std::map<std::string, std::string> role_to_sort_;
};

// Lowercase with '-' replaced by '_': "Co-Agent" -> "co_agent".
std::string NormalizeRole(std::string_view role);

// Attribute carrying a role in verb-class wrapper modules: "vn_theme".
std::string RoleAttribute(std::string_view role);

}  // namespace narrate::kb

#endif  // NARRATE_KB_ROLES_H_
