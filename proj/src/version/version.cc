// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "version/version.h"

#include <algorithm>

#include "core/filenames.h"
#include "core/key_codec.h"
#include "sst/sstdir.h"

namespace dentrykv {

SstDirHandle::~SstDirHandle() {
  if (!marked_for_deletion.load(std::memory_order_acquire)) return;
  if (deleter == nullptr || deleter->root == nullptr) return;
  if (deleter->crashed.load(std::memory_order_acquire)) return;
  // Failures are tolerable: whatever survives is an orphan for the next
  // open's recovery scan.
  if (deleter->kind == EngineKind::kDentry) {
    RemoveSstDir(deleter->root, level, number);
  } else {
    deleter->root->RemoveFile(PackedFileName(level, number));
  }
}

bool SstDirHandle::ContainsKey(std::string_view key) const {
  return CompareKeys(key, smallest) >= 0 && CompareKeys(key, largest) <= 0;
}

bool SstDirHandle::OverlapsRange(std::string_view lo,
                                 std::string_view hi) const {
  if (!hi.empty() && CompareKeys(smallest, hi) >= 0) return false;
  return CompareKeys(largest, lo) >= 0;
}

uint64_t Version::LevelEntryCount(int level) const {
  uint64_t total = 0;
  for (const HandleRef& h : levels[level]) total += h->entry_count;
  return total;
}

void Version::CandidatesForKey(int level, std::string_view key,
                               std::vector<HandleRef>* out) const {
  out->clear();
  const std::vector<HandleRef>& handles = levels[level];
  if (level == 0) {
    for (const HandleRef& h : handles) {
      if (h->ContainsKey(key)) out->push_back(h);
    }
    return;
  }
  // Disjoint sorted ranges: find the first handle whose largest >= key.
  auto it = std::lower_bound(handles.begin(), handles.end(), key,
                             [](const HandleRef& h, std::string_view k) {
                               return CompareKeys(h->largest, k) < 0;
                             });
  if (it != handles.end() && (*it)->ContainsKey(key)) out->push_back(*it);
}

void Version::CandidatesForRange(
    std::string_view lo, std::string_view hi,
    std::vector<std::vector<HandleRef>>* out) const {
  out->assign(levels.size(), {});
  for (size_t level = 0; level < levels.size(); level++) {
    for (const HandleRef& h : levels[level]) {
      if (h->OverlapsRange(lo, hi)) (*out)[level].push_back(h);
    }
  }
}

bool Version::KeyCoveredBelow(int level, std::string_view key) const {
  std::vector<HandleRef> scratch;
  for (int deeper = level + 1; deeper <= max_level(); deeper++) {
    CandidatesForKey(deeper, key, &scratch);
    if (!scratch.empty()) return true;
  }
  return false;
}

}  // namespace dentrykv
