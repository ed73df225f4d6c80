// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Read-side interface over one sorted run: an SST directory (dentry engine)
// or a packed table file (baseline engine). Instances are immutable once
// opened and are shared through the handle cache.

#ifndef DENTRYKV_SST_TABLE_READER_H_
#define DENTRYKV_SST_TABLE_READER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/record.h"
#include "dentrykv/status.h"

namespace dentrykv {

class TableReader {
 public:
  virtual ~TableReader() = default;

  virtual int level() const = 0;
  virtual uint64_t number() const = 0;
  virtual uint64_t entry_count() const = 0;
  virtual const std::string& smallest() const = 0;
  virtual const std::string& largest() const = 0;

  // Filter check only; never touches KV data.
  virtual bool MayContain(std::string_view key) const = 0;

  // All record variants for `key` in ascending seq order. *found=false when
  // the run has no entry for the key (the filter may still have said maybe).
  virtual Status RecordsFor(std::string_view key, std::vector<KvRecord>* recs,
                            bool* found) = 0;

  // Every key in the run, ascending raw-byte order.
  virtual Status Keys(std::vector<std::string>* keys) = 0;
};

// Newest record with seq <= snapshot_seq from an ascending variant list.
inline const KvRecord* VisibleRecord(const std::vector<KvRecord>& recs,
                                     uint64_t snapshot_seq) {
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    if (it->seq <= snapshot_seq) return &*it;
  }
  return nullptr;
}

}  // namespace dentrykv

#endif  // DENTRYKV_SST_TABLE_READER_H_
