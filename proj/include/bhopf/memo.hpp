#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace bhopf {

/// Thread-safe cache. The value is computed outside the lock, so recursive
/// lookups are fine; concurrent duplicate computations insert identical values.
template <class K, class V>
class Memo {
 public:
  template <class F>
  V get(const K& key, F&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<K, V> map_;
};

}  // namespace bhopf
