// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "core/record.h"

#include "util/coding.h"
#include "util/crc32c.h"

namespace dentrykv {

void AppendRecord(std::string* dst, const KvRecord& r) {
  const size_t start = dst->size();
  PutFixed64(dst, r.seq);
  PutFixed8(dst, static_cast<uint8_t>(r.op));
  PutFixed32(dst, static_cast<uint32_t>(r.value.size()));
  dst->append(r.value);
  const uint32_t crc = crc32c::Value(dst->data() + start, dst->size() - start);
  PutFixed32(dst, crc);
}

Status DecodeRecords(std::string_view input, std::vector<KvRecord>* out,
                     size_t* valid_prefix) {
  const size_t total = input.size();
  auto corrupt = [&](const char* what) {
    if (valid_prefix != nullptr) *valid_prefix = total - input.size();
    return Status::Corruption(std::string("kv record: ") + what);
  };
  while (!input.empty()) {
    // Header (seq, op, value_len) must fit before we can size the record.
    if (input.size() < 8 + 1 + 4) return corrupt("truncated header");
    const uint64_t value_len = DecodeFixed32(input.data() + 9);
    const size_t record_len = 8 + 1 + 4 + value_len + 4;
    if (input.size() < record_len) return corrupt("truncated record");
    const uint32_t expected = DecodeFixed32(input.data() + record_len - 4);
    const uint32_t actual = crc32c::Value(input.data(), record_len - 4);
    if (expected != actual) return corrupt("crc mismatch");
    const uint8_t op = static_cast<uint8_t>(input[8]);
    if (op > 1) return corrupt("bad op");
    if (op == 1 && value_len != 0) return corrupt("delete with value");
    KvRecord r;
    r.seq = DecodeFixed64(input.data());
    r.op = static_cast<OpCode>(op);
    r.value.assign(input.data() + 13, value_len);
    out->push_back(std::move(r));
    input.remove_prefix(record_len);
  }
  if (valid_prefix != nullptr) *valid_prefix = total;
  return Status::OK();
}

}  // namespace dentrykv
