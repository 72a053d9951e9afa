#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arbor/tree.hpp"

namespace arbor {

/// Isomorph-free generator of free trees on n vertices. Walks the canonical
/// center-rooted level sequences in reverse lexicographic order, one
/// representative per isomorphism class, in constant amortized time per tree.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Advances to the next class; false once the stream is exhausted.
  /// The first call yields the first tree.
  bool next();

  /// Depth-first level sequence of the current tree (root at level 0).
  const std::vector<int>& levels() const { return levels_; }
  Tree tree() const;

 private:
  bool next_rooted(std::size_t p);
  bool next_valid();
  std::size_t split_point() const;

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> levels_;
};

Tree tree_from_levels(const std::vector<int>& levels);

/// Calls `visit(index, tree, worker)` for every class of order n. With
/// threads > 1 the stream is partitioned round-robin across workers by
/// class index; each index is visited exactly once.
void for_each_tree(int n, int threads, const std::function<void(std::uint64_t, const Tree&, int)>& visit);

std::vector<Tree> enumerate_trees(int n);
std::uint64_t count_trees(int n, int threads = 1);

/// Resolves a requested worker count: values < 1 mean "hardware concurrency".
int resolve_threads(int requested);

}  // namespace arbor
