#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hollab/group.hpp"

namespace hollab::catalog {

/// A named group with pinned generators. Members of one family (A5/S5,
/// PSL2(q)/PGL2(q)/..., PSL3(q)/...) share a permutation domain, so the
/// socle and default ambient can be looked up by name and used together.
struct Entry {
  std::string name;
  Group group;
  std::string socle;
  std::string ambient;
  /// Automorphisms of `group` acting on the same domain, when known.
  std::optional<Group> aut_action;
};

struct Listing {
  std::string name;
  std::uint64_t order;
  std::string description;
};

/// Fixed entries and family patterns ("PSL2(q)" etc.) with expected orders.
std::vector<Listing> list();

/// InputError for unknown names, ResourceError for groups that are declared
/// but not constructed (PSU3(8)).
Entry lookup(std::string_view name);

} // namespace hollab::catalog
