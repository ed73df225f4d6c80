// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "version/version_edit.h"

#include "util/coding.h"
#include "util/crc32c.h"

namespace dentrykv {

namespace {
enum Tag : uint8_t {
  kLastSeq = 1,
  kNextFileNumber = 2,
  kLogNumber = 3,
  kAddedRun = 4,
  kRemovedRun = 5,
};
}  // namespace

void VersionEdit::EncodePayload(std::string* out) const {
  if (last_seq) {
    PutFixed8(out, kLastSeq);
    PutFixed64(out, *last_seq);
  }
  if (next_file_number) {
    PutFixed8(out, kNextFileNumber);
    PutFixed64(out, *next_file_number);
  }
  if (log_number) {
    PutFixed8(out, kLogNumber);
    PutFixed64(out, *log_number);
  }
  for (const AddedRun& a : added) {
    PutFixed8(out, kAddedRun);
    PutFixed8(out, static_cast<uint8_t>(a.level));
    PutFixed64(out, a.number);
    PutFixed32(out, a.entry_count);
    PutLengthPrefixed(out, a.smallest);
    PutLengthPrefixed(out, a.largest);
  }
  for (const RemovedRun& r : removed) {
    PutFixed8(out, kRemovedRun);
    PutFixed8(out, static_cast<uint8_t>(r.level));
    PutFixed64(out, r.number);
  }
}

Status VersionEdit::DecodePayload(std::string_view payload, VersionEdit* edit) {
  *edit = VersionEdit();
  while (!payload.empty()) {
    uint8_t tag;
    GetFixed8(&payload, &tag);
    uint64_t u64;
    switch (tag) {
      case kLastSeq:
        if (!GetFixed64(&payload, &u64)) {
          return Status::Corruption("edit: short last_seq");
        }
        edit->last_seq = u64;
        break;
      case kNextFileNumber:
        if (!GetFixed64(&payload, &u64)) {
          return Status::Corruption("edit: short next_file_number");
        }
        edit->next_file_number = u64;
        break;
      case kLogNumber:
        if (!GetFixed64(&payload, &u64)) {
          return Status::Corruption("edit: short log_number");
        }
        edit->log_number = u64;
        break;
      case kAddedRun: {
        AddedRun a;
        uint8_t level;
        std::string_view smallest, largest;
        if (!GetFixed8(&payload, &level) || !GetFixed64(&payload, &a.number) ||
            !GetFixed32(&payload, &a.entry_count) ||
            !GetLengthPrefixed(&payload, &smallest) ||
            !GetLengthPrefixed(&payload, &largest)) {
          return Status::Corruption("edit: short added run");
        }
        a.level = level;
        a.smallest.assign(smallest);
        a.largest.assign(largest);
        edit->added.push_back(std::move(a));
        break;
      }
      case kRemovedRun: {
        RemovedRun r;
        uint8_t level;
        if (!GetFixed8(&payload, &level) || !GetFixed64(&payload, &r.number)) {
          return Status::Corruption("edit: short removed run");
        }
        r.level = level;
        edit->removed.push_back(r);
        break;
      }
      default:
        return Status::Corruption("edit: unknown tag " + std::to_string(tag));
    }
  }
  return Status::OK();
}

void VersionEdit::AppendFrame(std::string* out) const {
  std::string payload;
  EncodePayload(&payload);
  PutFixed32(out, crc32c::Value(payload));
  PutFixed32(out, static_cast<uint32_t>(payload.size()));
  out->append(payload);
}

void ParseManifestEdits(std::string_view data, std::vector<VersionEdit>* edits,
                        bool* clean) {
  *clean = false;
  while (true) {
    if (data.empty()) {
      *clean = true;
      return;
    }
    if (data.size() < 8) return;
    const uint32_t crc = DecodeFixed32(data.data());
    const uint32_t len = DecodeFixed32(data.data() + 4);
    if (data.size() < 8 + static_cast<size_t>(len)) return;
    std::string_view payload = data.substr(8, len);
    if (crc32c::Value(payload) != crc) return;
    VersionEdit edit;
    if (!VersionEdit::DecodePayload(payload, &edit).ok()) return;
    edits->push_back(std::move(edit));
    data.remove_prefix(8 + len);
  }
}

}  // namespace dentrykv
