#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/memo.hpp"
#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace arbor {

enum class Model { Oo, SemirandomFirst, SemirandomSecond, RandomRandom };

const char* to_string(Model m);
/// Accepts "oo", "semirandom-first", "semirandom-second", "random-random".
std::optional<Model> parse_model(std::string_view name);

/// Whole-tree values of one isomorphism class under every play model.
struct ClassValues {
  Prob oo;        // both optimal, first player
  Prob p_first;   // optimal first vs. random
  Prob q_second;  // optimal second vs. random
  Prob rr;        // both random, first player
};

using MemoTable = ConcurrentMemo<ClassValues>;

struct ValueBundle {
  Prob oo_value;
  std::vector<Vertex> oo_moves;
  std::vector<Prob> oo_by_vertex;
  Prob p_first;
  std::vector<Vertex> p_first_moves;
  std::vector<Prob> p_first_by_vertex;
  Prob q_second;
  std::vector<Prob> q_second_by_vertex;
  Prob rr_value;
  std::vector<Prob> rr_by_vertex;
};

/// Value with its per-first-move breakdown and (for max models) argmax set.
struct ModelValue {
  Prob value;
  std::vector<Prob> by_vertex;
  std::vector<Vertex> moves;  // empty for averaging models
};

/// Distribution of the number of uniform guesses until the target is hit.
struct StoppingDist {
  std::vector<Prob> probs;  // probs[t - 1] = P(tau = t), t = 1..n

  Prob total() const;
  Prob odd_mass() const;
  Rational expectation() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverLimits {
  /// Upper bound on subtree classes evaluated (cache misses) by one solver
  /// instance; 0 disables the check.
  std::size_t max_classes = 0;
};

/// Exact evaluator for all play models. Values are memoized per isomorphism
/// class of (sub)tree; the table may be shared between solvers and threads.
class GameSolver {
 public:
  GameSolver();
  explicit GameSolver(std::shared_ptr<MemoTable> memo, SolverLimits limits = {});

  ClassValues class_values(const Tree& t);

  ModelValue value_oo(const Tree& t);
  ModelValue value_semirandom_first(const Tree& t);
  ModelValue value_semirandom_second(const Tree& t);
  ModelValue value_random_random(const Tree& t);
  ModelValue value(const Tree& t, Model m);
  ValueBundle bundle(const Tree& t);

  StoppingDist stopping_time_distribution(const Tree& t);
  /// First-player win probability when both guess uniformly and the target is fixed at `target`.
  Prob fixed_target_value(const Tree& t, Vertex target);

  const std::shared_ptr<MemoTable>& memo() const { return memo_; }

 private:
  struct PerVertex {
    std::vector<Prob> oo, p_first, q_second, rr;
  };
  PerVertex per_vertex(const Tree& t);
  ClassValues class_values(const Tree& t, const CanonKey& key);
  std::vector<Prob> stopping_probs(const Tree& t, const CanonKey& key);
  Prob fixed_target(const Tree& t, Vertex target, const CanonKey& key);
  void check_budget();

  std::shared_ptr<MemoTable> memo_;
  std::shared_ptr<ConcurrentMemo<std::vector<Prob>>> stopping_memo_;
  std::shared_ptr<ConcurrentMemo<Prob>> fixed_memo_;
  SolverLimits limits_;
  std::atomic<std::size_t> computed_{0};
};

/// Vertices v for which T minus v has the fewest odd-order components.
std::vector<Vertex> min_odd_component_vertices(const Tree& t);

/// All indices attaining the maximum.
std::vector<Vertex> argmax_set(const std::vector<Prob>& values);

}  // namespace arbor
