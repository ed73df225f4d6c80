// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// An SST directory is this store's replacement for an SST file: a directory
// "L<level>/<dir_no:06>" whose entries are one KV file per key (filename =
// encoded key, content = that key's wire records in ascending seq order)
// plus a ".meta" file:
//
//    magic        4 bytes  "DLM1"
//    entry_count  8 bytes LE
//    bits_per_key 4 bytes LE
//    num_hashes   4 bytes LE
//    bit_len      8 bytes LE
//    bits         ceil(bit_len/8) bytes
//    smallest_key u32 LE length + bytes
//    largest_key  u32 LE length + bytes
//    crc          4 bytes LE CRC32C over all preceding bytes
//
// KV files are never individually synced; the manifest commit that adds the
// directory to the version is the durability barrier. A directory with a
// valid .meta is self-consistent, and .meta is written last, so recovery
// can treat any directory it cannot account for as garbage.

#ifndef DENTRYKV_SST_SSTDIR_H_
#define DENTRYKV_SST_SSTDIR_H_

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

struct SstDirMeta {
  uint64_t entry_count = 0;
  uint32_t bits_per_key = 0;
  uint32_t num_hashes = 0;
  BloomFilter bloom;
  std::string smallest;
  std::string largest;
};

std::string EncodeSstDirMeta(const SstDirMeta& meta);
Status DecodeSstDirMeta(std::string_view input, SstDirMeta* meta);

// Builds one SST directory. Entries must arrive in ascending key order with
// unique keys; each entry is either written fresh or hard-linked from an
// existing KV file. Finish writes ".meta" last. Nothing here syncs.
class SstDirWriter {
 public:
  static Status Create(StoreRoot* root, int level, uint64_t dir_no,
                       uint32_t bits_per_key, uint32_t num_hashes,
                       std::unique_ptr<SstDirWriter>* out);

  // Writes a fresh KV file holding `records` (ascending seq).
  Status Add(std::string_view key, const std::vector<KvRecord>& records);

  // Hard-links an existing KV file; zero data bytes move.
  Status Link(std::string_view key, std::string_view src_rel_path);

  Status Finish(SstDirMeta* meta);

  uint64_t entry_count() const { return keys_.size(); }
  // Record bytes written through Add (the rewrite cost; linking adds none).
  uint64_t payload_bytes() const { return payload_bytes_; }
  // Bytes of the ".meta" file.
  uint64_t meta_bytes() const { return meta_bytes_; }
  int level() const { return level_; }
  uint64_t dir_no() const { return dir_no_; }

 private:
  SstDirWriter(StoreRoot* root, int level, uint64_t dir_no,
               uint32_t bits_per_key, uint32_t num_hashes, std::string dir)
      : root_(root),
        level_(level),
        dir_no_(dir_no),
        bits_per_key_(bits_per_key),
        num_hashes_(num_hashes),
        dir_(std::move(dir)) {}

  Status CheckOrder(std::string_view key, std::string* encoded);

  StoreRoot* const root_;
  const int level_;
  const uint64_t dir_no_;
  const uint32_t bits_per_key_;
  const uint32_t num_hashes_;
  const std::string dir_;
  std::vector<std::string> keys_;
  uint64_t payload_bytes_ = 0;
  uint64_t meta_bytes_ = 0;
  bool finished_ = false;
};

class SstDirReader : public TableReader {
 public:
  // Reads and verifies ".meta". When the meta is corrupt it is rebuilt from
  // the directory's filenames (keys, count, and range are all recoverable
  // without reading record bytes) and rewritten.
  static Status Open(StoreRoot* root, int level, uint64_t dir_no,
                     uint32_t bits_per_key, uint32_t num_hashes,
                     std::shared_ptr<SstDirReader>* out);

  int level() const override { return level_; }
  uint64_t number() const override { return dir_no_; }
  uint64_t entry_count() const override { return meta_.entry_count; }
  const std::string& smallest() const override { return meta_.smallest; }
  const std::string& largest() const override { return meta_.largest; }
  bool MayContain(std::string_view key) const override {
    return meta_.bloom.MayContain(key);
  }
  Status RecordsFor(std::string_view key, std::vector<KvRecord>* recs,
                    bool* found) override;
  Status Keys(std::vector<std::string>* keys) override;

  const SstDirMeta& meta() const { return meta_; }
  // Relative path of the KV file for `key` inside this directory.
  Status KvFilePath(std::string_view key, std::string* rel_path) const;

 private:
  SstDirReader(StoreRoot* root, int level, uint64_t dir_no, std::string dir)
      : root_(root), level_(level), dir_no_(dir_no), dir_(std::move(dir)) {}

  StoreRoot* const root_;
  const int level_;
  const uint64_t dir_no_;
  const std::string dir_;
  SstDirMeta meta_;
};

// Recomputes a directory's meta from its filenames and rewrites ".meta".
Status RebuildSstDirMeta(StoreRoot* root, int level, uint64_t dir_no,
                         uint32_t bits_per_key, uint32_t num_hashes,
                         SstDirMeta* meta);

// Removes every entry of an SST directory, then the directory itself.
Status RemoveSstDir(StoreRoot* root, int level, uint64_t dir_no);

}  // namespace dentrykv

#endif  // DENTRYKV_SST_SSTDIR_H_
