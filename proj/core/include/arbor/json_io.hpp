#pragma once

#include <nlohmann/json.hpp>

#include "arbor/game.hpp"
#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// {"num": "3", "den": "5", "approx": 0.6}; num/den are decimal strings.
nlohmann::json rational_to_json(const Rational& r);
/// Accepts the object form above (approx ignored).
Rational rational_from_json(const nlohmann::json& j);

/// {"n": 3, "edges": [[0,1],[1,2]]}
nlohmann::json tree_to_json(const Tree& t);

/// Full analysis payload: every model's value, per-vertex values, optimal
/// move sets and the stopping-time distribution (documented in docs/schema.md).
nlohmann::json bundle_to_json(const Tree& t, const ValueBundle& b, const StoppingDist& stopping);

}  // namespace arbor
