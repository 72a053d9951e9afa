#pragma once

#include <string>
#include <string_view>

#include "arbor/tree.hpp"

namespace arbor {

/// Parses the edge-list text format: first line n, then n-1 lines "u v".
/// Blank trailing lines and CR line endings are tolerated. Syntax errors report
/// the 1-based line number; structural errors are those of Tree::from_edges.
Tree parse_tree(std::string_view text);

/// Inverse of parse_tree: "n\nu v\n..." with edges in sorted order, trailing newline.
std::string format_tree(const Tree& t);

/// Accepts a family shorthand ("P:n", "S:n", "SP:l1,l2,...") or edge-list text.
Tree parse_tree_spec(std::string_view spec);

}  // namespace arbor
