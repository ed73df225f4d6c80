// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "mem/memtable.h"

#include <mutex>

namespace dentrykv {

namespace {

// Newest record with seq <= snapshot_seq; lists ascend in seq, so scan from
// the back.
const KvRecord* PickVisible(const std::vector<KvRecord>& records,
                            uint64_t snapshot_seq) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->seq <= snapshot_seq) return &*it;
  }
  return nullptr;
}

}  // namespace

Status Memtable::Insert(std::string_view key, KvRecord rec) {
  if (sealed()) return Status::Sealed("insert into sealed memtable");
  std::unique_lock lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    it = entries_.emplace(std::string(key), std::vector<KvRecord>()).first;
  }
  const size_t added = key.size() + rec.value.size() + kRecordOverhead;
  it->second.push_back(std::move(rec));
  approx_bytes_.fetch_add(added, std::memory_order_relaxed);
  return Status::OK();
}

bool Memtable::Get(std::string_view key, uint64_t snapshot_seq,
                   KvRecord* rec) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  const KvRecord* found = PickVisible(it->second, snapshot_seq);
  if (found == nullptr) return false;
  *rec = *found;
  return true;
}

void Memtable::Range(std::string_view lo, std::string_view hi,
                     uint64_t snapshot_seq,
                     std::vector<std::pair<std::string, KvRecord>>* out) const {
  std::shared_lock lock(mu_);
  auto it = entries_.lower_bound(lo);
  const bool bounded = !hi.empty();
  for (; it != entries_.end(); ++it) {
    if (bounded && it->first >= hi) break;
    const KvRecord* found = PickVisible(it->second, snapshot_seq);
    if (found != nullptr) out->emplace_back(it->first, *found);
  }
}

bool Memtable::empty() const {
  std::shared_lock lock(mu_);
  return entries_.empty();
}

size_t Memtable::key_count() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace dentrykv
