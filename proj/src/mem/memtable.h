// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Sorted in-memory map of the newest writes. Each key holds its full list
// of record variants in ascending sequence order (snapshots may need any of
// them). One writer inserts; readers run concurrently under a shared lock;
// once sealed the table is immutable and lock-free to read.

#ifndef DENTRYKV_MEM_MEMTABLE_H_
#define DENTRYKV_MEM_MEMTABLE_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/record.h"
#include "dentrykv/status.h"

namespace dentrykv {

class Memtable {
 public:
  using EntryMap = std::map<std::string, std::vector<KvRecord>, std::less<>>;

  Memtable() = default;
  Memtable(const Memtable&) = delete;
  Memtable& operator=(const Memtable&) = delete;

  // Appends a record to the key's variant list. The caller must hand in
  // records in globally ascending seq order. Errors: Sealed.
  Status Insert(std::string_view key, KvRecord rec);

  // Newest record with seq <= snapshot_seq, or false if the key has none.
  bool Get(std::string_view key, uint64_t snapshot_seq, KvRecord* rec) const;

  // Per-key newest-<=-snapshot record for keys in [lo, hi), ascending.
  // An empty hi means unbounded above. Deletes are included; callers elide.
  void Range(std::string_view lo, std::string_view hi, uint64_t snapshot_seq,
             std::vector<std::pair<std::string, KvRecord>>* out) const;

  void Seal() { sealed_.store(true, std::memory_order_release); }
  bool sealed() const { return sealed_.load(std::memory_order_acquire); }

  size_t approx_bytes() const {
    return approx_bytes_.load(std::memory_order_relaxed);
  }
  bool empty() const;
  size_t key_count() const;

  // Whole-table view for minor compaction. Only valid once sealed: the map
  // can no longer change, so no lock is taken.
  const EntryMap& sealed_entries() const { return entries_; }

 private:
  // Rough per-record bookkeeping overhead (map node, vector slot).
  static constexpr size_t kRecordOverhead = 32;

  mutable std::shared_mutex mu_;
  EntryMap entries_;
  std::atomic<size_t> approx_bytes_{0};
  std::atomic<bool> sealed_{false};
};

}  // namespace dentrykv

#endif  // DENTRYKV_MEM_MEMTABLE_H_
