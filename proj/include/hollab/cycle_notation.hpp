#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hollab/group.hpp"

namespace hollab {

/// 1-based cycle notation: "(1,2,3)(4,5)". Points inside a cycle may be
/// separated by commas or whitespace, cycles by optional whitespace; "()"
/// is the identity. Throws InputError on malformed text.
Perm parse_perm(std::string_view text, std::size_t degree);
std::string format_perm(const Perm& p);

/// Generators separated by ';'.
std::vector<Perm> parse_generators(std::string_view text, std::size_t degree);
std::vector<std::string> format_generators(const Group& g);

/// "perm:DEGREE:GEN;GEN;..."
bool is_inline_spec(std::string_view text);
Group parse_inline_spec(std::string_view text);
std::string format_inline_spec(const Group& g);

} // namespace hollab
