// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_TESTS_TEST_UTIL_H_
#define DENTRYKV_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <unistd.h>
#include <map>
#include <atomic>
#include <random>
#include <string>
#include <vector>

#include "dentrykv/db.h"
#include "dentrykv/options.h"
#include "dentrykv/status.h"

namespace dentrykv {
namespace test {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<uint64_t> counter{0};
    path_ = (std::filesystem::temp_directory_path() /
             ("dentrykv-" + tag + "-" + std::to_string(::getpid()) + "-" +
              std::to_string(counter.fetch_add(1))))
                .string();
    std::filesystem::remove_all(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline std::mt19937_64 Rng(uint64_t seed) { return std::mt19937_64(seed); }

inline std::string RandomKey(std::mt19937_64& rng, size_t max_len = 24) {
  static const char kAlphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-+=@"
      "/%. \xff\x01";
  size_t len = 1 + rng() % max_len;
  std::string key(len, '\0');
  for (auto& c : key) c = kAlphabet[rng() % (sizeof(kAlphabet) - 1)];
  return key;
}

inline std::string RandomValue(std::mt19937_64& rng, size_t max_len = 64) {
  size_t len = rng() % (max_len + 1);
  std::string value(len, '\0');
  for (auto& c : value) c = static_cast<char>(rng());
  return value;
}

// In-memory reference model: applies the same puts and deletes, answers
// gets and range scans. The store must agree with it exactly.
class MapOracle {
 public:
  void Put(const std::string& key, const std::string& value) {
    map_[key] = value;
  }
  void Delete(const std::string& key) { map_.erase(key); }
  bool Get(const std::string& key, std::string* value) const {
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *value = it->second;
    return true;
  }
  std::vector<std::pair<std::string, std::string>> Scan(
      const std::string& lo, const std::string& hi) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto it = map_.lower_bound(lo); it != map_.end(); ++it) {
      if (!hi.empty() && it->first >= hi) break;
      out.push_back(*it);
    }
    return out;
  }
  size_t size() const { return map_.size(); }
  const std::map<std::string, std::string>& map() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

// Options tuned so small workloads exercise seals and both compactions.
inline Options SmallStoreOptions(EngineKind kind) {
  Options options;
  options.engine = kind;
  options.memtable_bytes = 2048;
  options.l0_limit_files = 64;
  options.sstdir_file_target = 32;
  options.max_level = 4;
  options.sync_enabled = false;
  options.background_worker = false;
  return options;
}

}  // namespace test
}  // namespace dentrykv

#endif  // DENTRYKV_TESTS_TEST_UTIL_H_
