#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "arbor/game.hpp"

namespace arbor {

class ZeroTrials : public std::invalid_argument {
 public:
  ZeroTrials() : std::invalid_argument("monte_carlo: trials must be positive") {}
};

struct McResult {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
};

/// Uniform integer in [0, bound) by rejection on raw mt19937_64 output, so the
/// stream is identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Plays `trials` seeded games. Strategic sides pick the argmax first move of
/// the relevant model on the current candidate subtree, smallest label first.
/// Reports the win frequency of the first player (oo, random-random) or of the
/// strategic player (semirandom models), with its binomial standard error.
McResult monte_carlo(const Tree& t, Model model, std::uint64_t trials, std::uint64_t seed, GameSolver& solver);

}  // namespace arbor
