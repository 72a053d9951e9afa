#include "arbor/simulate.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace arbor {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

McResult monte_carlo(const Tree& t, Model model, std::uint64_t trials, std::uint64_t seed, GameSolver& solver) {
  if (trials == 0) throw ZeroTrials();
  const int n = t.order();
  std::mt19937_64 rng(seed);

  bool strategic[2] = {false, false};
  int scored_player = 0;
  Model policy = Model::SemirandomFirst;
  switch (model) {
    case Model::Oo:
      strategic[0] = strategic[1] = true;
      policy = Model::Oo;
      break;
    case Model::SemirandomFirst:
      strategic[0] = true;
      break;
    case Model::SemirandomSecond:
      strategic[1] = true;
      scored_player = 1;
      break;
    case Model::RandomRandom:
      break;
  }

  std::map<std::vector<Vertex>, Vertex> policy_cache;
  auto strategic_move = [&](const std::vector<Vertex>& cand) {
    auto it = policy_cache.find(cand);
    if (it != policy_cache.end()) return it->second;
    Component sub = induced_subtree(t, cand);
    ModelValue mv = solver.value(sub.tree, policy);
    Vertex pick = sub.to_original[mv.moves.front()];
    policy_cache.emplace(cand, pick);
    return pick;
  };

  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  std::uint64_t wins = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Vertex target = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<Vertex> cand = all;
    int mover = 0;
    while (true) {
      Vertex guess = strategic[mover] ? strategic_move(cand) : cand[uniform_below(rng, cand.size())];
      if (guess == target) break;
      cand = component_within(t, cand, guess, target);
      mover ^= 1;
    }
    if (mover == scored_player) ++wins;
  }

  McResult r;
  r.wins = wins;
  r.trials = trials;
  r.estimate = static_cast<double>(wins) / static_cast<double>(trials);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
  return r;
}

}  // namespace arbor
