// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// One KV file holds the records for a single key, concatenated in strictly
// ascending sequence order. Wire layout of a record, all integers
// little-endian:
//
//    seq        8 bytes
//    op         1 byte   (0 = Put, 1 = Delete)
//    value_len  4 bytes
//    value      value_len bytes
//    crc        4 bytes  CRC32C over seq..value
//
// The layout is stable; do not change it.

#ifndef DENTRYKV_CORE_RECORD_H_
#define DENTRYKV_CORE_RECORD_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dentrykv/status.h"

namespace dentrykv {

enum class OpCode : uint8_t { kPut = 0, kDelete = 1 };

constexpr uint64_t kMaxSequence = ~static_cast<uint64_t>(0);

struct KvRecord {
  uint64_t seq = 0;
  OpCode op = OpCode::kPut;
  std::string value;  // Empty when op == kDelete.

  bool operator==(const KvRecord&) const = default;
};

// Bytes a record occupies on disk: 17 + value size.
inline size_t EncodedRecordSize(const KvRecord& r) {
  return 8 + 1 + 4 + r.value.size() + 4;
}

void AppendRecord(std::string* dst, const KvRecord& r);

// Decodes a concatenation of wire records into *out (appended in file
// order). Returns OK when the input is consumed exactly; Corruption when a
// crc fails, an op byte is invalid, a Delete carries a value, or the tail
// is truncated. On corruption *out still holds the records that checked
// out and *valid_prefix (if non-null) their byte length, so callers can
// salvage the clean prefix.
Status DecodeRecords(std::string_view input, std::vector<KvRecord>* out,
                     size_t* valid_prefix = nullptr);

}  // namespace dentrykv

#endif  // DENTRYKV_CORE_RECORD_H_
