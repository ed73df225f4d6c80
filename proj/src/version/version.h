// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// The version is the in-memory catalog of live SST directories (or packed
// tables): per level, which runs exist and what key ranges they span.
// Versions are immutable; each committed edit publishes a fresh one, and
// readers pin whichever version was current when their query started.
//
// Handles are shared between versions. When a compaction retires a run it
// marks the handle; the last version that drops the handle triggers the
// physical removal, so no reader can ever see its files disappear.

#ifndef DENTRYKV_VERSION_VERSION_H_
#define DENTRYKV_VERSION_VERSION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dentrykv/options.h"
#include "io/store_root.h"

namespace dentrykv {

// Shared by every handle; lets destructors skip deletion after a simulated
// process kill (the files must stay behind exactly as a crash would leave
// them).
struct DeletionContext {
  StoreRoot* root = nullptr;
  EngineKind kind = EngineKind::kDentry;
  std::atomic<bool> crashed{false};
};

struct SstDirHandle {
  int level = 0;
  uint64_t number = 0;
  uint64_t entry_count = 0;
  std::string smallest;
  std::string largest;
  std::shared_ptr<DeletionContext> deleter;
  std::atomic<bool> marked_for_deletion{false};

  SstDirHandle() = default;
  SstDirHandle(const SstDirHandle&) = delete;
  SstDirHandle& operator=(const SstDirHandle&) = delete;
  ~SstDirHandle();

  void MarkForDeletion() {
    marked_for_deletion.store(true, std::memory_order_release);
  }
  bool ContainsKey(std::string_view key) const;
  bool OverlapsRange(std::string_view lo, std::string_view hi) const;
};

using HandleRef = std::shared_ptr<SstDirHandle>;

struct Version {
  // levels[0] ordered newest-first (descending number); levels[n>=1]
  // ordered by smallest key with pairwise disjoint ranges.
  std::vector<std::vector<HandleRef>> levels;

  explicit Version(int max_level) : levels(max_level + 1) {}

  int max_level() const { return static_cast<int>(levels.size()) - 1; }
  uint64_t LevelEntryCount(int level) const;

  // L0: every handle whose range contains the key, newest first.
  // L>=1: zero or one handle, by binary search over disjoint ranges.
  void CandidatesForKey(int level, std::string_view key,
                        std::vector<HandleRef>* out) const;

  // Handles intersecting [lo, hi) per level; empty hi means unbounded.
  void CandidatesForRange(std::string_view lo, std::string_view hi,
                          std::vector<std::vector<HandleRef>>* out) const;

  // True if some level deeper than `level` has a handle containing the key.
  bool KeyCoveredBelow(int level, std::string_view key) const;
};

}  // namespace dentrykv

#endif  // DENTRYKV_VERSION_VERSION_H_
