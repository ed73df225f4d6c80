// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// One manifest record: the durable description of a version change. Wire
// format is a framed, crc-guarded payload of tagged fields:
//
//    frame    crc u32 LE (over payload) | len u32 LE | payload
//    payload  sequence of tagged fields:
//      tag 1  last_seq u64
//      tag 2  next_file_number u64
//      tag 3  log_number u64
//      tag 4  added run: level u8 | number u64 | entry_count u32 |
//             smallest (u32 len + bytes) | largest (u32 len + bytes)
//      tag 5  removed run: level u8 | number u64
//
// Records are appended to "MANIFEST-<number:06>"; the "CURRENT" file at the
// store root holds the live manifest's name plus a newline.

#ifndef DENTRYKV_VERSION_VERSION_EDIT_H_
#define DENTRYKV_VERSION_VERSION_EDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dentrykv/status.h"

namespace dentrykv {

struct VersionEdit {
  struct AddedRun {
    int level = 0;
    uint64_t number = 0;
    uint32_t entry_count = 0;
    std::string smallest;
    std::string largest;
  };
  struct RemovedRun {
    int level = 0;
    uint64_t number = 0;
  };

  std::optional<uint64_t> last_seq;
  std::optional<uint64_t> next_file_number;
  std::optional<uint64_t> log_number;
  std::vector<AddedRun> added;
  std::vector<RemovedRun> removed;

  void AddRun(int level, uint64_t number, uint32_t entry_count,
              std::string smallest, std::string largest) {
    added.push_back({level, number, entry_count, std::move(smallest),
                     std::move(largest)});
  }
  void RemoveRun(int level, uint64_t number) {
    removed.push_back({level, number});
  }

  void EncodePayload(std::string* out) const;
  static Status DecodePayload(std::string_view payload, VersionEdit* edit);

  // Appends the full crc|len|payload frame.
  void AppendFrame(std::string* out) const;
};

// Decodes the valid prefix of a manifest into *edits. *clean reports whether
// the whole input parsed; a torn or corrupt tail is not an error.
void ParseManifestEdits(std::string_view data, std::vector<VersionEdit>* edits,
                        bool* clean);

}  // namespace dentrykv

#endif  // DENTRYKV_VERSION_VERSION_EDIT_H_
