// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_INCLUDE_OPTIONS_H_
#define DENTRYKV_INCLUDE_OPTIONS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "dentrykv/status.h"

namespace dentrykv {

// Which storage layout the store uses underneath the common API.
//   kDentry: one file per KV pair inside per-level SST directories; major
//            compaction redeploys directory entries via hard links.
//   kPacked: conventional packed SST files; major compaction rewrites
//            every merged record.
enum class EngineKind : uint8_t { kDentry = 0, kPacked = 1 };

// Byte and call counters maintained by the storage layer. All mutating
// filesystem traffic goes through that layer, so these are exact.
struct IoCounters {
  uint64_t data_bytes_written = 0;  // payload bytes passed to write calls
  uint64_t files_created = 0;
  uint64_t links_created = 0;
  uint64_t entries_removed = 0;
  uint64_t dirs_created = 0;
  uint64_t dirs_removed = 0;
  uint64_t syncs = 0;
  uint64_t bytes_read = 0;

  bool operator==(const IoCounters&) const = default;
};

// Per-engine compaction accounting, kept separately from IoCounters so the
// cost of major compaction can be attributed precisely.
struct CompactionStats {
  uint64_t minor_compactions = 0;
  uint64_t major_compactions = 0;
  // KV payload bytes written by major compaction (record rewrites only;
  // meta files and manifest records are excluded).
  uint64_t major_payload_bytes = 0;
  uint64_t major_meta_bytes = 0;
  uint64_t major_files_linked = 0;
  uint64_t major_files_rewritten = 0;
};

// Hooks used by tests to inject faults and crashes at named points.
// Production code never sets these.
struct TestHooks {
  // Called at named stage points ("minor.dir_written", "major.committed",
  // ...). Returning true aborts the enclosing operation as if the process
  // died there: no cleanup runs.
  std::function<bool(std::string_view point)> crash_point;
  // Consulted before every durability sync; a non-OK result is surfaced
  // as that sync's failure.
  std::function<Status(const std::string& rel_path)> sync_fault;
  // Observation-only callback at the same stage points (e.g. to slow the
  // compaction worker down).
  std::function<void(std::string_view point)> stage;
};

struct Options {
  EngineKind engine = EngineKind::kDentry;

  size_t memtable_bytes = 4 << 20;       // seal threshold
  size_t immutable_queue_cap = 4;        // sealed memtables awaiting compaction
  uint64_t l0_limit_files = 10000;       // L0 capacity in KV entries; level n holds 10^n times more
  uint64_t sstdir_file_target = 2000;    // KV files per compaction output directory
  uint32_t bloom_bits_per_key = 10;
  uint32_t bloom_num_hashes = 7;
  size_t value_cache_bytes = 8 << 20;    // 0 disables
  size_t handle_cache_entries = 1000;    // 0 disables
  uint32_t wal_grace_seconds = 60;       // retention after minor compaction
  bool sync_enabled = true;
  int max_level = 6;

  // Plumbing knobs.
  bool wal_sync_per_write = false;  // default: sync only at memtable seal
  bool flush_on_close = true;       // drain sealed memtables before closing
  // When false, no background thread is started; sealed memtables and due
  // compactions are drained synchronously on the writing thread. The
  // benchmark driver uses this mode so runs are reproducible.
  bool background_worker = true;

  std::shared_ptr<TestHooks> hooks;

  Status Validate() const {
    if (memtable_bytes == 0 || immutable_queue_cap == 0 || l0_limit_files == 0 ||
        sstdir_file_target == 0 || bloom_bits_per_key == 0 || bloom_num_hashes == 0 ||
        max_level < 1) {
      return Status::InvalidArgument("options fields must be positive");
    }
    if (l0_limit_files < sstdir_file_target) {
      return Status::InvalidArgument("l0_limit_files must be >= sstdir_file_target");
    }
    return Status::OK();
  }
};

}  // namespace dentrykv

#endif  // DENTRYKV_INCLUDE_OPTIONS_H_
