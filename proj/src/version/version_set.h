// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_VERSION_VERSION_SET_H_
#define DENTRYKV_VERSION_VERSION_SET_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dentrykv/options.h"
#include "dentrykv/status.h"
#include "io/store_root.h"
#include "version/version.h"
#include "version/version_edit.h"

namespace dentrykv {

// Owns the current Version, the manifest file, and the store-wide counters
// (last persisted sequence, next file number, oldest live log). All commits
// funnel through LogAndApply: append to the manifest, sync, and only then
// publish the new version.
class VersionSet {
 public:
  VersionSet(StoreRoot* root, const Options* options, EngineKind kind,
             std::shared_ptr<DeletionContext> deleter);
  ~VersionSet();

  // Recovery at open, in three steps: (1) replay the manifest named by
  // CURRENT, trusting its valid prefix; (2) scan the level directories,
  // deleting runs the version does not know (orphans of uncommitted
  // compactions) and failing on runs it knows but cannot find; (3) collect
  // logs >= log_number for WAL replay, deleting older ones. Finishes by
  // re-serializing the recovered state into a fresh manifest and pointing
  // CURRENT at it.
  Status Recover(std::vector<uint64_t>* logs_to_replay);

  // Appends the edit (stamped with the current next_file_number), syncs the
  // manifest, then publishes the new version. On failure the version is
  // unchanged and the next commit rewrites a fresh manifest first, since a
  // torn tail would swallow every frame appended after it.
  Status LogAndApply(VersionEdit* edit);

  std::shared_ptr<const Version> current() const;

  uint64_t NewFileNumber();
  uint64_t last_seq() const;
  uint64_t log_number() const;
  uint64_t next_file_number() const;
  uint64_t manifest_number() const;

  struct Job {
    int level = -1;
    std::vector<HandleRef> upper;  // from level
    std::vector<HandleRef> lower;  // overlapping runs from level + 1
  };
  // Picks the lowest level whose entry total has reached its limit
  // (l0_limit * 10^level). L0 jobs take every L0 run; deeper levels take
  // one run, round-robin by key order. The bottom level never compacts.
  bool PickCompaction(Job* job);

  Status CloseManifest();

 private:
  Status ApplyUnlocked(const VersionEdit& edit,
                       std::shared_ptr<Version>* out) const;
  Status WriteSnapshotManifestUnlocked();
  Status InstallCurrentUnlocked(const std::string& manifest_name);

  StoreRoot* const root_;
  const Options* const options_;
  const EngineKind kind_;
  const std::shared_ptr<DeletionContext> deleter_;

  mutable std::mutex mu_;
  std::shared_ptr<const Version> current_;
  uint64_t next_file_number_ = 1;
  uint64_t last_seq_ = 0;
  uint64_t log_number_ = 0;
  uint64_t manifest_number_ = 0;
  std::unique_ptr<AppendableFile> manifest_;
  bool manifest_broken_ = false;
  std::vector<std::string> cursors_;  // per-level round-robin position
};

}  // namespace dentrykv

#endif  // DENTRYKV_VERSION_VERSION_SET_H_
