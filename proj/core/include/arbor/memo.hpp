#pragma once

#include <array>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "arbor/canonical.hpp"

namespace arbor {

/// Thread-safe map from canonical keys to cached values. Values are pure
/// functions of the key, so concurrent inserts of the same key are
/// interchangeable and the first one is kept.
template <class Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const CanonKey& key) const {
    const Shard& s = shard(key);
    std::shared_lock lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void insert(const CanonKey& key, Value value) {
    Shard& s = shard(key);
    std::unique_lock lock(s.mutex);
    s.map.try_emplace(key, std::move(value));
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& s : shards_) {
      std::shared_lock lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

  void clear() {
    for (auto& s : shards_) {
      std::unique_lock lock(s.mutex);
      s.map.clear();
    }
  }

 private:
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<CanonKey, Value> map;
  };
  static constexpr std::size_t kShards = 32;

  Shard& shard(const CanonKey& key) { return shards_[std::hash<CanonKey>{}(key) % kShards]; }
  const Shard& shard(const CanonKey& key) const { return shards_[std::hash<CanonKey>{}(key) % kShards]; }

  std::array<Shard, kShards> shards_;
};

}  // namespace arbor
