// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Packed table: the baseline engine's conventional SST file, one sorted run
// per file ("L<level>/<file_no:06>.sst"). Deliberately minimal; it exists
// so the two engines' I/O profiles can be compared through one API.
//
// File layout, integers little-endian:
//
//    data      per key: that key's wire records, concatenated
//    index     per key: key (u32 length + bytes) | offset u64 | length u32
//    bloom     bit_len u64 | num_hashes u32 | bits
//    footer    smallest (u32 len + bytes) | largest (u32 len + bytes) |
//              entry_count u64 | index_off u64 | index_len u64 |
//              bloom_off u64 | bloom_len u64
//    trailer   footer_len u32 | magic "PKT1"
//
// Readers keep the index and filter in memory (via the handle cache) and
// read record groups with positioned reads.

#ifndef DENTRYKV_SST_PACKED_TABLE_H_
#define DENTRYKV_SST_PACKED_TABLE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/record.h"
#include "dentrykv/status.h"
#include "io/store_root.h"
#include "sst/bloom.h"
#include "sst/table_reader.h"

namespace dentrykv {

class PackedTableBuilder {
 public:
  PackedTableBuilder(StoreRoot* root, int level, uint64_t file_no,
                     uint32_t bits_per_key, uint32_t num_hashes);

  // Entries must arrive in ascending key order, records in ascending seq.
  Status Add(std::string_view key, const std::vector<KvRecord>& records);

  // Assembles and writes the file in one exclusive create.
  Status Finish();

  uint64_t entry_count() const { return index_.size(); }
  // Record bytes in the data region (the rewrite cost).
  uint64_t payload_bytes() const {
    return finished_ ? payload_bytes_ : data_.size();
  }
  // Index + bloom + footer + trailer bytes.
  uint64_t meta_bytes() const { return meta_bytes_; }
  const std::string& smallest() const { return smallest_; }
  const std::string& largest() const { return largest_; }
  int level() const { return level_; }
  uint64_t file_no() const { return file_no_; }

 private:
  struct IndexEntry {
    std::string key;
    uint64_t offset;
    uint32_t length;
  };

  StoreRoot* const root_;
  const int level_;
  const uint64_t file_no_;
  const uint32_t bits_per_key_;
  const uint32_t num_hashes_;
  std::string data_;
  std::vector<IndexEntry> index_;
  std::string smallest_, largest_;
  uint64_t payload_bytes_ = 0;
  uint64_t meta_bytes_ = 0;
  bool finished_ = false;
};

class PackedTableReader : public TableReader {
 public:
  static Status Open(StoreRoot* root, int level, uint64_t file_no,
                     std::shared_ptr<PackedTableReader>* out);

  int level() const override { return level_; }
  uint64_t number() const override { return file_no_; }
  uint64_t entry_count() const override { return entry_count_; }
  const std::string& smallest() const override { return smallest_; }
  const std::string& largest() const override { return largest_; }
  bool MayContain(std::string_view key) const override {
    return bloom_.MayContain(key);
  }
  Status RecordsFor(std::string_view key, std::vector<KvRecord>* recs,
                    bool* found) override;
  Status Keys(std::vector<std::string>* keys) override;

 private:
  struct IndexEntry {
    std::string key;
    uint64_t offset;
    uint32_t length;
  };

  PackedTableReader(StoreRoot* root, int level, uint64_t file_no,
                    std::string path)
      : root_(root), level_(level), file_no_(file_no), path_(std::move(path)) {}

  StoreRoot* const root_;
  const int level_;
  const uint64_t file_no_;
  const std::string path_;
  uint64_t entry_count_ = 0;
  std::string smallest_, largest_;
  std::vector<IndexEntry> index_;
  BloomFilter bloom_;
};

}  // namespace dentrykv

#endif  // DENTRYKV_SST_PACKED_TABLE_H_
