#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Canonical byte string of an isomorphism class. For free trees it is the
/// sorted-children parenthesis encoding rooted at the center (the smaller
/// of the two encodings when the center is an edge).
struct CanonKey {
  std::string bytes;

  friend bool operator==(const CanonKey&, const CanonKey&) = default;
  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

/// One or two central vertices (minimum eccentricity), ascending.
std::vector<Vertex> centers(const Tree& t);

/// Parenthesis encoding of T rooted at `root`, children sorted bytewise.
std::string rooted_encoding(const Tree& t, Vertex root);

CanonKey canonical_key(const Tree& t);

/// Key of the rooted tree (T, root): equal iff there is an isomorphism mapping root to root.
CanonKey rooted_key(const Tree& t, Vertex root);

}  // namespace arbor

template <>
struct std::hash<arbor::CanonKey> {
  std::size_t operator()(const arbor::CanonKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};
