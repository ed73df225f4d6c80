// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Write-ahead log. One log file per memtable; the writer appends before the
// memtable insert, the log is sealed and synced when its memtable becomes
// immutable, and the file is kept for a grace period after the memtable's
// minor compaction so a slow filesystem commit cannot lose the only copy.
//
// Record wire layout, integers little-endian:
//
//    crc          4 bytes   CRC32C over the payload
//    payload_len  4 bytes
//    payload      seq (8) | op (1) | key_len (4) | key | value_len (4) | value

#ifndef DENTRYKV_WAL_WAL_H_
#define DENTRYKV_WAL_WAL_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/record.h"
#include "dentrykv/status.h"
#include "io/store_root.h"

namespace dentrykv {

struct WalRecord {
  uint64_t seq = 0;
  OpCode op = OpCode::kPut;
  std::string key;
  std::string value;

  bool operator==(const WalRecord&) const = default;
};

inline size_t EncodedWalRecordSize(size_t key_len, size_t value_len) {
  return 4 + 4 + 8 + 1 + 4 + key_len + 4 + value_len;
}

void AppendWalRecord(std::string* dst, uint64_t seq, OpCode op,
                     std::string_view key, std::string_view value);

// Appends the maximal valid prefix of `input` to *out. A crc failure,
// truncation, or malformed payload stops the parse there; corruption is a
// truncation, never an error.
void ParseWalRecords(std::string_view input, std::vector<WalRecord>* out);

class WalWriter {
 public:
  // Creates "<file_number:06>.log" at the store root.
  static Status Create(StoreRoot* root, uint64_t file_number,
                       bool sync_per_write, std::unique_ptr<WalWriter>* out);

  Status Append(uint64_t seq, OpCode op, std::string_view key,
                std::string_view value);

  // Marks the log complete and makes it durable. The log stays appendable
  // if the sync fails.
  Status SealAndSync();

  Status Close();

  uint64_t file_number() const { return file_number_; }
  bool sealed() const { return sealed_; }
  uint64_t size() const { return file_->size(); }

 private:
  WalWriter(uint64_t file_number, bool sync_per_write,
            std::unique_ptr<AppendableFile> file)
      : file_number_(file_number),
        sync_per_write_(sync_per_write),
        file_(std::move(file)) {}

  const uint64_t file_number_;
  const bool sync_per_write_;
  std::unique_ptr<AppendableFile> file_;
  bool sealed_ = false;
};

// Reads "<file_number:06>.log" and returns its valid prefix.
Status ReplayWal(StoreRoot* root, uint64_t file_number,
                 std::vector<WalRecord>* out);

// A synced log whose memtable has been compacted, awaiting deletion.
struct PendingWal {
  uint64_t file_number = 0;
  std::chrono::steady_clock::time_point retain_until;
};

// Deletes the log iff `now` has reached its deadline. Returns whether the
// file was removed; *status reports a removal that failed.
bool MaybeRetireWal(StoreRoot* root, const PendingWal& log,
                    std::chrono::steady_clock::time_point now, Status* status);

}  // namespace dentrykv

#endif  // DENTRYKV_WAL_WAL_H_
