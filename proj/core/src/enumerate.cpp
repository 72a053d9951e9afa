#include "arbor/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace arbor {

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw TreeError(TreeErrc::InvalidOrder, "tree order must be positive");
  for (int i = 0; i <= n / 2; ++i) levels_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) levels_.push_back(i);
}

Tree tree_from_levels(const std::vector<int>& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    int d = levels[i];
    if (d > 0) edges.emplace_back(last_at[d - 1], static_cast<Vertex>(i));
    last_at[d] = static_cast<Vertex>(i);
  }
  return make_tree_unchecked(static_cast<int>(levels.size()), std::move(edges));
}

Tree FreeTreeGenerator::tree() const { return tree_from_levels(levels_); }

// Successor of a rooted level sequence, copying the subtree period from q
// over positions p..end.
bool FreeTreeGenerator::next_rooted(std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  for (std::size_t i = p; i < levels_.size(); ++i) levels_[i] = levels_[i - p + q];
  return true;
}

// Index of the second vertex at level 1: the start of the "rest" part once the
// first root subtree is split off.
std::size_t FreeTreeGenerator::split_point() const {
  for (std::size_t i = 2; i < levels_.size(); ++i)
    if (levels_[i] == 1) return i;
  return levels_.size();
}

bool FreeTreeGenerator::next_valid() {
  std::size_t m = split_point();
  // left: levels[1..m) shifted down by one; rest: root plus levels[m..).
  int left_height = *std::max_element(levels_.begin() + 1, levels_.begin() + m) - 1;
  int rest_height = m < levels_.size() ? *std::max_element(levels_.begin() + m, levels_.end()) : 0;
  std::size_t left_len = m - 1;
  std::size_t rest_len = levels_.size() - m + 1;

  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left_len > rest_len) {
      valid = false;
    } else if (left_len == rest_len) {
      // Compare left (levels[i]-1 for i in 1..m) with rest (0, levels[m..]).
      bool greater = false;
      for (std::size_t i = 0; i < left_len; ++i) {
        int a = levels_[1 + i] - 1;
        int b = i == 0 ? 0 : levels_[m + i - 1];
        if (a != b) {
          greater = a > b;
          break;
        }
      }
      if (greater) valid = false;
    }
  }
  if (valid) return true;

  std::size_t p = left_len;
  int old_at_p = levels_[p];
  if (!next_rooted(p)) return false;
  if (old_at_p > 2) {
    std::size_t m2 = split_point();
    int h = *std::max_element(levels_.begin() + 1, levels_.begin() + m2) - 1;
    std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t j = 0; j < len; ++j) levels_[levels_.size() - len + j] = static_cast<int>(j) + 1;
  }
  return true;
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  if (n_ == 1) {
    done_ = started_;
    started_ = true;
    return !done_;
  }
  if (started_) {
    std::size_t p = levels_.size() - 1;
    while (levels_[p] == 1) --p;
    if (!next_rooted(p)) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  if (!next_valid()) {
    done_ = true;
    return false;
  }
  return true;
}

int resolve_threads(int requested) {
  if (requested >= 1) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void for_each_tree(int n, int threads, const std::function<void(std::uint64_t, const Tree&, int)>& visit) {
  threads = resolve_threads(threads);
  auto worker = [&](int w) {
    FreeTreeGenerator gen(n);
    std::uint64_t index = 0;
    while (gen.next()) {
      if (static_cast<int>(index % static_cast<std::uint64_t>(threads)) == w) visit(index, gen.tree(), w);
      ++index;
    }
  };
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        worker(w);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Tree> enumerate_trees(int n) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n);
  while (gen.next()) out.push_back(gen.tree());
  return out;
}

std::uint64_t count_trees(int n, int threads) {
  threads = resolve_threads(threads);
  std::vector<std::uint64_t> per_worker(threads, 0);
  if (threads == 1) {
    FreeTreeGenerator gen(n);
    while (gen.next()) ++per_worker[0];
  } else {
    // Count through the partitioned visitor so the partition itself is exercised.
    for_each_tree(n, threads, [&](std::uint64_t, const Tree&, int w) { ++per_worker[w]; });
  }
  std::uint64_t total = 0;
  for (auto c : per_worker) total += c;
  return total;
}

}  // namespace arbor
