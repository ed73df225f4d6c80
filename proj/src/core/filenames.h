// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Store layout under the root directory:
//
//    CURRENT               names the live manifest
//    MANIFEST-000001       version edit log
//    000002.log            write-ahead logs
//    L0/ .. L6/            level directories
//    L0/000003/            one SST directory (dentry engine)
//    L1/000004.sst         one packed table (baseline engine)
//
// All numbers come from one store-wide counter, zero-padded to at least six
// digits.

#ifndef DENTRYKV_CORE_FILENAMES_H_
#define DENTRYKV_CORE_FILENAMES_H_

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace dentrykv {

inline std::string NumberString(uint64_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(n));
  return buf;
}

inline std::string LogFileName(uint64_t number) {
  return NumberString(number) + ".log";
}

inline std::string ManifestFileName(uint64_t number) {
  return "MANIFEST-" + NumberString(number);
}

inline std::string CurrentFileName() { return "CURRENT"; }

inline std::string LevelDirName(int level) {
  return "L" + std::to_string(level);
}

inline std::string SstDirName(int level, uint64_t dir_no) {
  return LevelDirName(level) + "/" + NumberString(dir_no);
}

inline std::string PackedFileName(int level, uint64_t file_no) {
  return LevelDirName(level) + "/" + NumberString(file_no) + ".sst";
}

inline bool ParseNumber(std::string_view s, uint64_t* n) {
  if (s.empty()) return false;
  uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<uint64_t>(c - '0');
  }
  *n = v;
  return true;
}

// "<number>.log" → number.
inline bool ParseLogFileName(std::string_view name, uint64_t* number) {
  if (name.size() < 5 || name.substr(name.size() - 4) != ".log") return false;
  return ParseNumber(name.substr(0, name.size() - 4), number);
}

// "MANIFEST-<number>" → number.
inline bool ParseManifestFileName(std::string_view name, uint64_t* number) {
  constexpr std::string_view kPrefix = "MANIFEST-";
  if (name.size() <= kPrefix.size() || name.substr(0, kPrefix.size()) != kPrefix)
    return false;
  return ParseNumber(name.substr(kPrefix.size()), number);
}

// Bare "<number>" → number (an SST directory entry in a level dir).
inline bool ParseSstDirEntry(std::string_view name, uint64_t* number) {
  return ParseNumber(name, number);
}

// "<number>.sst" → number.
inline bool ParsePackedFileEntry(std::string_view name, uint64_t* number) {
  if (name.size() < 5 || name.substr(name.size() - 4) != ".sst") return false;
  return ParseNumber(name.substr(0, name.size() - 4), number);
}

// "L<level>" → level.
inline bool ParseLevelDirName(std::string_view name, int* level) {
  if (name.size() < 2 || name[0] != 'L') return false;
  uint64_t n;
  if (!ParseNumber(name.substr(1), &n) || n > 255) return false;
  *level = static_cast<int>(n);
  return true;
}

}  // namespace dentrykv

#endif  // DENTRYKV_CORE_FILENAMES_H_
