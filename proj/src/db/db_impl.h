// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// The engine proper. One writer at a time appends to the WAL and the active
// memtable; readers take an immutable view (active memtable, sealed
// memtables, current version) and never block the writer. A single
// background worker flushes sealed memtables and runs major compactions;
// with background_worker off the same steps run inline on the writing
// thread, which keeps benchmark runs reproducible.

#ifndef DENTRYKV_DB_DB_IMPL_H_
#define DENTRYKV_DB_DB_IMPL_H_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "compact/compaction.h"
#include "dentrykv/db.h"
#include "dentrykv/options.h"
#include "dentrykv/status.h"
#include "io/store_root.h"
#include "mem/memtable.h"
#include "sst/table_reader.h"
#include "util/lru_cache.h"
#include "version/version.h"
#include "version/version_set.h"
#include "wal/wal.h"

namespace dentrykv {

class DbImpl : public DB {
 public:
  DbImpl(const Options& options, std::string path);
  ~DbImpl() override;

  Status Put(std::string_view key, std::string_view value) override;
  Status Delete(std::string_view key) override;
  Status Get(std::string_view key, std::string* value) override;
  Status Get(std::string_view key, const Snapshot* snapshot,
             std::string* value) override;
  Status Scan(std::string_view lo, std::string_view hi,
              const Snapshot* snapshot,
              std::vector<std::pair<std::string, std::string>>* out) override;

  Status NewSnapshot(const Snapshot** out) override;
  Status ReleaseSnapshot(const Snapshot* snapshot) override;

  Status CompactAll() override;
  Status Close() override;

  IoCounters CountersSnapshot() const override;
  void ResetCounters() override;
  CompactionStats compaction_stats() const override;
  VersionState TEST_VersionState() const override;

  Status TEST_CompactOnce(StepResult* result) override;
  void TEST_Crash() override;
  Status TEST_SealMemtable() override;

  // Called by DB::Open after construction.
  Status Recover();

 private:
  class SnapshotImpl;

  // A sealed memtable waiting to become an L0 run, with the log that fed
  // it and the greatest seq it holds.
  struct ImmEntry {
    std::shared_ptr<Memtable> mem;
    uint64_t wal_number = 0;
    uint64_t max_seq = 0;
  };

  // Everything one read needs, pinned against concurrent swaps.
  struct ReadView {
    std::shared_ptr<Memtable> mem;
    std::vector<std::shared_ptr<Memtable>> imms;  // newest first
    std::shared_ptr<const Version> ver;
  };

  struct ValueCacheKey {
    uint64_t number;
    std::string key;
    bool operator==(const ValueCacheKey&) const = default;
  };
  struct ValueCacheHash {
    size_t operator()(const ValueCacheKey& k) const {
      return std::hash<uint64_t>()(k.number) ^
             (std::hash<std::string>()(k.key) * 1099511628211ull);
    }
  };

  Status CheckUsable() const;
  Status WriteInternal(OpCode op, std::string_view key, std::string_view value);
  // Caller holds write_mu_. With allow_empty the seal happens even for an
  // empty table (the minor pass then just advances the log number).
  Status SealActiveMemtable(bool allow_empty);
  // Runs worker steps on this thread until there is nothing left to do.
  Status DrainInline();
  Status WorkerStep(StepResult* result);
  void WorkerLoop();
  void StopWorker();
  void MarkCrashed();
  void RetireDueWals();

  ReadView AcquireView() const;
  Status OpenReader(int level, uint64_t number,
                    std::shared_ptr<TableReader>* out);
  // Looks `key` up in one run. *claimed=true when the run holds a record
  // visible at `snapshot_seq`; the search stops at the first claim.
  Status LookupInRun(const HandleRef& h, std::string_view key,
                     uint64_t snapshot_seq, bool* claimed, KvRecord* rec);
  Status GetImpl(std::string_view key, uint64_t snapshot_seq,
                 std::string* value);
  void OnRunsRetired(const std::vector<HandleRef>& runs);
  uint64_t SnapshotFloor() const;
  Status SnapshotBound(const Snapshot* snapshot, uint64_t* bound) const;

  const Options options_;
  const std::string path_;

  // Destruction order matters: handles and the version set reference the
  // root, so root_ is declared first and destroyed last.
  std::unique_ptr<StoreRoot> root_;
  std::shared_ptr<DeletionContext> deleter_;
  std::unique_ptr<VersionSet> versions_;
  std::unique_ptr<Compactor> compactor_;

  // Single-writer lock; also covers wal_.
  std::mutex write_mu_;
  std::unique_ptr<WalWriter> wal_;

  // Publishes memtable swaps and the immutable queue to readers and the
  // worker.
  mutable std::mutex state_mu_;
  std::shared_ptr<Memtable> mem_;
  uint64_t wal_number_ = 0;
  std::deque<ImmEntry> imm_;
  std::deque<PendingWal> retire_;
  bool shutting_down_ = false;
  std::condition_variable imm_cv_;   // room in imm_
  std::condition_variable work_cv_;  // work for the worker
  std::thread worker_;

  // Serializes compaction jobs between the worker, CompactAll, and inline
  // drains. Held for a whole job; never while blocking on imm_cv_.
  std::mutex bg_mu_;

  std::atomic<uint64_t> last_seq_{0};
  std::atomic<bool> crashed_{false};
  std::atomic<bool> closed_{false};

  mutable std::mutex snap_mu_;
  // Snapshot objects stay allocated until close so a released pointer is
  // still recognizably ours (and rejected) instead of dangling.
  std::vector<std::unique_ptr<SnapshotImpl>> snapshots_;
  std::multiset<uint64_t> live_snapshot_seqs_;

  mutable LruCache<ValueCacheKey, const std::vector<KvRecord>, ValueCacheHash>
      value_cache_;
  mutable LruCache<uint64_t, TableReader> handle_cache_;
};

}  // namespace dentrykv

#endif  // DENTRYKV_DB_DB_IMPL_H_
