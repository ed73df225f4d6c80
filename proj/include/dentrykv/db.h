// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_INCLUDE_DB_H_
#define DENTRYKV_INCLUDE_DB_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dentrykv/options.h"
#include "dentrykv/status.h"

namespace dentrykv {

// Pins the sequence number at creation time; reads through it see the store
// as of that point, and compaction retains every record variant a live
// snapshot can still observe.
class Snapshot {
 public:
  uint64_t sequence() const { return seq_; }

 protected:
  explicit Snapshot(uint64_t seq) : seq_(seq) {}
  ~Snapshot() = default;
  uint64_t seq_;
};

// Debug view of the live catalog, for tests and tooling.
struct LevelFileInfo {
  int level;
  uint64_t number;
  std::string smallest;
  std::string largest;
  uint64_t entry_count;
};
struct VersionState {
  std::vector<LevelFileInfo> files;
  uint64_t last_seq;
  uint64_t next_file_number;
  uint64_t log_number;
};

// Embedded key-value store. One writer at a time; any number of concurrent
// readers; one background compaction worker.
class DB {
 public:
  static Status Open(const Options& options, const std::string& path,
                     std::unique_ptr<DB>* out);

  DB() = default;
  DB(const DB&) = delete;
  DB& operator=(const DB&) = delete;
  virtual ~DB() = default;

  virtual Status Put(std::string_view key, std::string_view value) = 0;
  virtual Status Delete(std::string_view key) = 0;
  virtual Status Get(std::string_view key, std::string* value) = 0;
  virtual Status Get(std::string_view key, const Snapshot* snapshot,
                     std::string* value) = 0;
  // All live keys in [lo, hi), ascending; deletions elided.
  virtual Status Scan(std::string_view lo, std::string_view hi,
                      const Snapshot* snapshot,
                      std::vector<std::pair<std::string, std::string>>* out) = 0;

  virtual Status NewSnapshot(const Snapshot** out) = 0;
  virtual Status ReleaseSnapshot(const Snapshot* snapshot) = 0;

  // Seals the active memtable and drains every pending compaction, then
  // runs one merge pass per populated level from the top down; the bottom
  // level merges into itself, pruning variants no live snapshot needs.
  // Afterwards all data sits in as few runs as the level limits allow.
  virtual Status CompactAll() = 0;

  virtual Status Close() = 0;

  virtual IoCounters CountersSnapshot() const = 0;
  virtual void ResetCounters() = 0;
  virtual CompactionStats compaction_stats() const = 0;
  virtual VersionState TEST_VersionState() const = 0;

  // What a single worker step did.
  enum class StepResult { kIdle, kMinor, kMajor };
  // Runs one compaction-worker step on the calling thread (tests drive
  // this with background_worker=false).
  virtual Status TEST_CompactOnce(StepResult* result) = 0;
  // Abandons the store as a process kill would: the worker stops and no
  // state is flushed, synced, or cleaned up.
  virtual void TEST_Crash() = 0;
  // Seals the active memtable regardless of size.
  virtual Status TEST_SealMemtable() = 0;
};

// Removes the store's files (CURRENT, MANIFEST-*, *.log, level directories)
// under `path`, then the directory itself if empty. Foreign files survive.
Status DestroyDB(const std::string& path);

}  // namespace dentrykv

#endif  // DENTRYKV_INCLUDE_DB_H_
