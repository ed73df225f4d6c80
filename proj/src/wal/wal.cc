// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "wal/wal.h"

#include "core/filenames.h"
#include "util/coding.h"
#include "util/crc32c.h"

namespace dentrykv {

void AppendWalRecord(std::string* dst, uint64_t seq, OpCode op,
                     std::string_view key, std::string_view value) {
  std::string payload;
  payload.reserve(8 + 1 + 4 + key.size() + 4 + value.size());
  PutFixed64(&payload, seq);
  PutFixed8(&payload, static_cast<uint8_t>(op));
  PutLengthPrefixed(&payload, key);
  PutLengthPrefixed(&payload, value);
  PutFixed32(dst, crc32c::Value(payload));
  PutFixed32(dst, static_cast<uint32_t>(payload.size()));
  dst->append(payload);
}

void ParseWalRecords(std::string_view input, std::vector<WalRecord>* out) {
  while (input.size() >= 8) {
    const uint32_t crc = DecodeFixed32(input.data());
    const uint32_t payload_len = DecodeFixed32(input.data() + 4);
    if (input.size() < 8 + static_cast<size_t>(payload_len)) return;
    std::string_view payload = input.substr(8, payload_len);
    if (crc32c::Value(payload) != crc) return;
    WalRecord rec;
    uint8_t op;
    std::string_view key, value;
    if (!GetFixed64(&payload, &rec.seq) || !GetFixed8(&payload, &op) ||
        op > 1 || !GetLengthPrefixed(&payload, &key) ||
        !GetLengthPrefixed(&payload, &value) || !payload.empty()) {
      return;
    }
    if (op == 1 && !value.empty()) return;
    rec.op = static_cast<OpCode>(op);
    rec.key.assign(key);
    rec.value.assign(value);
    out->push_back(std::move(rec));
    input.remove_prefix(8 + payload_len);
  }
}

Status WalWriter::Create(StoreRoot* root, uint64_t file_number,
                         bool sync_per_write, std::unique_ptr<WalWriter>* out) {
  std::unique_ptr<AppendableFile> file;
  Status s = root->NewAppendable(LogFileName(file_number), &file);
  if (!s.ok()) return s;
  out->reset(new WalWriter(file_number, sync_per_write, std::move(file)));
  return Status::OK();
}

Status WalWriter::Append(uint64_t seq, OpCode op, std::string_view key,
                         std::string_view value) {
  if (sealed_) {
    return Status::Sealed("append to sealed log " + LogFileName(file_number_));
  }
  std::string buf;
  buf.reserve(EncodedWalRecordSize(key.size(), value.size()));
  AppendWalRecord(&buf, seq, op, key, value);
  Status s = file_->Append(buf);
  if (!s.ok()) return s;
  if (sync_per_write_) return file_->Sync();
  return Status::OK();
}

Status WalWriter::SealAndSync() {
  if (sealed_) return Status::OK();
  Status s = file_->Sync();
  if (!s.ok()) return s;
  sealed_ = true;
  return Status::OK();
}

Status WalWriter::Close() { return file_->Close(); }

Status ReplayWal(StoreRoot* root, uint64_t file_number,
                 std::vector<WalRecord>* out) {
  std::string data;
  Status s = root->ReadFile(LogFileName(file_number), &data);
  if (!s.ok()) return s;
  ParseWalRecords(data, out);
  return Status::OK();
}

bool MaybeRetireWal(StoreRoot* root, const PendingWal& log,
                    std::chrono::steady_clock::time_point now, Status* status) {
  *status = Status::OK();
  if (now < log.retain_until) return false;
  Status s = root->RemoveFile(LogFileName(log.file_number));
  // A log already gone (e.g. removed by a previous open) is not an error.
  if (!s.ok() && s.code() != StatusCode::kSrcMissing) *status = s;
  return true;
}

}  // namespace dentrykv
