#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "msindex/tree.hpp"

namespace msindex {

// Text format: first line n, then n-1 lines "u v" with u < v. Lines that
// start with '#' are comments.

/// Throws ParseError on malformed text and NotATree on a non-tree.
Tree parse_edge_list(std::istream& in);
Tree parse_edge_list(std::string_view text);
Tree read_edge_list_file(const std::string& path);

/// Canonical serialization: sorted edges, LF line endings.
std::string format_edge_list(const Tree& tree);

}  // namespace msindex
