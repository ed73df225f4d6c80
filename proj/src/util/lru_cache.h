// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_UTIL_LRU_CACHE_H_
#define DENTRYKV_UTIL_LRU_CACHE_H_

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace dentrykv {

// Thread-safe LRU map. Entries carry an explicit charge (bytes, or 1 when
// the capacity counts entries); inserting past `capacity` evicts from the
// cold end. A capacity of zero disables the cache entirely. Values are
// handed out as shared_ptr so eviction never invalidates a live reader.
template <typename K, typename V, typename Hash = std::hash<K>>
class LruCache {
 public:
  explicit LruCache(size_t capacity) : capacity_(capacity) {}

  LruCache(const LruCache&) = delete;
  LruCache& operator=(const LruCache&) = delete;

  std::shared_ptr<V> Get(const K& key) {
    std::lock_guard<std::mutex> guard(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second.pos);
    return it->second.value;
  }

  void Insert(const K& key, std::shared_ptr<V> value, size_t charge) {
    if (capacity_ == 0) return;
    std::lock_guard<std::mutex> guard(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      usage_ -= it->second.charge;
      order_.erase(it->second.pos);
      map_.erase(it);
    }
    order_.push_front(key);
    map_.emplace(key, Entry{std::move(value), charge, order_.begin()});
    usage_ += charge;
    while (usage_ > capacity_ && !order_.empty()) {
      auto victim = map_.find(order_.back());
      usage_ -= victim->second.charge;
      map_.erase(victim);
      order_.pop_back();
    }
  }

  void Erase(const K& key) {
    std::lock_guard<std::mutex> guard(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return;
    usage_ -= it->second.charge;
    order_.erase(it->second.pos);
    map_.erase(it);
  }

  // Drops every entry whose key matches `pred`.
  template <typename Pred>
  void EraseIf(Pred pred) {
    std::lock_guard<std::mutex> guard(mu_);
    for (auto it = order_.begin(); it != order_.end();) {
      if (pred(*it)) {
        auto victim = map_.find(*it);
        usage_ -= victim->second.charge;
        map_.erase(victim);
        it = order_.erase(it);
      } else {
        ++it;
      }
    }
  }

  void Clear() {
    std::lock_guard<std::mutex> guard(mu_);
    map_.clear();
    order_.clear();
    usage_ = 0;
  }

  size_t usage() const {
    std::lock_guard<std::mutex> guard(mu_);
    return usage_;
  }

  size_t size() const {
    std::lock_guard<std::mutex> guard(mu_);
    return map_.size();
  }

 private:
  struct Entry {
    std::shared_ptr<V> value;
    size_t charge;
    typename std::list<K>::iterator pos;
  };

  const size_t capacity_;
  mutable std::mutex mu_;
  std::list<K> order_;  // MRU at front.
  std::unordered_map<K, Entry, Hash> map_;
  size_t usage_ = 0;
};

}  // namespace dentrykv

#endif  // DENTRYKV_UTIL_LRU_CACHE_H_
