// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Minor compaction turns a sealed memtable into one new L0 run. Major
// compaction merges the runs of a level with the overlapping runs one level
// down; in the dentry engine a key whose surviving records already sit in
// exactly one input KV file is moved by hard link, so the common case
// writes directory entries instead of data.
//
// Both paths follow the same commit discipline: write everything, commit
// one manifest edit, and only then retire inputs. A crash anywhere leaves
// either complete inputs (uncommitted outputs are orphans for recovery to
// sweep) or complete outputs (leftover inputs are orphans), never a mix.
//
// Named crash points, in execution order, for fault-injection tests:
//   minor.begin, minor.dir_written, minor.committed,
//   major.begin, major.inputs_scanned, major.one_output_written,
//   major.outputs_done, major.committed, major.inputs_removed

#ifndef DENTRYKV_COMPACT_COMPACTION_H_
#define DENTRYKV_COMPACT_COMPACTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "dentrykv/options.h"
#include "dentrykv/status.h"
#include "io/store_root.h"
#include "mem/memtable.h"
#include "sst/table_reader.h"
#include "version/version.h"
#include "version/version_set.h"

namespace dentrykv {

class Compactor {
 public:
  struct Env {
    StoreRoot* root = nullptr;
    VersionSet* versions = nullptr;
    const Options* options = nullptr;
    EngineKind kind = EngineKind::kDentry;
    std::shared_ptr<TestHooks> hooks;
    std::shared_ptr<DeletionContext> deleter;
    // Opens (or fetches from the handle cache) a reader for one run.
    std::function<Status(int level, uint64_t number,
                         std::shared_ptr<TableReader>*)>
        open_reader;
    // Smallest live snapshot seq, or kMaxSequence when none.
    std::function<uint64_t()> snapshot_floor;
    // Called after a commit removed these runs from the version; the engine
    // invalidates caches and marks the handles for physical deletion.
    std::function<void(const std::vector<HandleRef>&)> on_runs_retired;
  };

  explicit Compactor(Env env) : env_(std::move(env)) {}

  // Sealed memtable -> one L0 run. `log_number_after` is the oldest log
  // still needed once this table is durable; `max_seq` the table's greatest
  // sequence. An empty table commits only the log number advance.
  Status MinorCompact(const Memtable& table, uint64_t log_number_after,
                      uint64_t max_seq);

  Status MajorCompact(const VersionSet::Job& job);

  CompactionStats stats() const;

 private:
  // True aborts the operation mid-flight, exactly where a kill would.
  bool CrashPoint(std::string_view point);
  Status InjectCrash(std::string_view point);

  Env env_;
  mutable std::mutex stats_mu_;
  CompactionStats stats_;
};

// Per-key conflict resolution and retention, shared by both engines and
// exposed for direct testing.

// Index into `contenders` of the record list holding the globally greatest
// seq. Decided from (seq, op) headers alone.
size_t ResolveWinner(const std::vector<std::vector<KvRecord>>& contenders);

// Records that must survive compaction: every record with seq >=
// snapshot_floor, plus the newest one below the floor. Input lists ascend
// in seq per contender; the result ascends in seq.
std::vector<KvRecord> RetainedRecords(
    const std::vector<std::vector<KvRecord>>& contenders,
    uint64_t snapshot_floor);

// A tombstone may be dropped only where no deeper level could still hold a
// shadowed value for the key.
bool ShouldDropTombstone(std::string_view key, int output_level,
                         const Version& version);

}  // namespace dentrykv

#endif  // DENTRYKV_COMPACT_COMPACTION_H_
