#pragma once

#include <span>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Limb numbers l_1..l_{n-1}: l_k counts pairs (v, T') where T' is a
/// component of order k of T minus v. Empty for the one-vertex tree.
struct LimbProfile {
  std::vector<int> ell;  // ell[k - 1] holds l_k

  int order() const { return static_cast<int>(ell.size()) + 1; }
  /// l_k, zero outside 1..n-1.
  int at(int k) const { return (k >= 1 && k <= static_cast<int>(ell.size())) ? ell[k - 1] : 0; }

  friend bool operator==(const LimbProfile&, const LimbProfile&) = default;
};

LimbProfile limb_profile(const Tree& t);

/// Closed form for spiders: sum_i [k <= l_i] + sum_i [k >= n - l_i].
/// Throws TreeError(InvalidSpider) for fewer than three legs and
/// std::out_of_range unless 1 <= k <= n-1.
int spider_limb_formula(std::span<const int> legs, int k);

}  // namespace arbor
