// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Little-endian fixed-width integer encoding. Every on-disk integer in the
// store goes through these helpers so the formats are byte-identical across
// hosts.

#ifndef DENTRYKV_UTIL_CODING_H_
#define DENTRYKV_UTIL_CODING_H_

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace dentrykv {

inline void EncodeFixed32(char* dst, uint32_t value) {
  uint8_t* b = reinterpret_cast<uint8_t*>(dst);
  b[0] = static_cast<uint8_t>(value);
  b[1] = static_cast<uint8_t>(value >> 8);
  b[2] = static_cast<uint8_t>(value >> 16);
  b[3] = static_cast<uint8_t>(value >> 24);
}

inline void EncodeFixed64(char* dst, uint64_t value) {
  uint8_t* b = reinterpret_cast<uint8_t*>(dst);
  for (int i = 0; i < 8; i++) {
    b[i] = static_cast<uint8_t>(value >> (8 * i));
  }
}

inline uint32_t DecodeFixed32(const char* src) {
  const uint8_t* b = reinterpret_cast<const uint8_t*>(src);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

inline uint64_t DecodeFixed64(const char* src) {
  const uint8_t* b = reinterpret_cast<const uint8_t*>(src);
  uint64_t v = 0;
  for (int i = 7; i >= 0; i--) {
    v = (v << 8) | b[i];
  }
  return v;
}

inline void PutFixed32(std::string* dst, uint32_t value) {
  char buf[4];
  EncodeFixed32(buf, value);
  dst->append(buf, 4);
}

inline void PutFixed64(std::string* dst, uint64_t value) {
  char buf[8];
  EncodeFixed64(buf, value);
  dst->append(buf, 8);
}

inline void PutFixed8(std::string* dst, uint8_t value) {
  dst->push_back(static_cast<char>(value));
}

// u32 length followed by the raw bytes.
inline void PutLengthPrefixed(std::string* dst, std::string_view s) {
  PutFixed32(dst, static_cast<uint32_t>(s.size()));
  dst->append(s.data(), s.size());
}

// Cursor-style readers: advance *input past the consumed bytes, return false
// if the input is too short.
inline bool GetFixed32(std::string_view* input, uint32_t* value) {
  if (input->size() < 4) return false;
  *value = DecodeFixed32(input->data());
  input->remove_prefix(4);
  return true;
}

inline bool GetFixed64(std::string_view* input, uint64_t* value) {
  if (input->size() < 8) return false;
  *value = DecodeFixed64(input->data());
  input->remove_prefix(8);
  return true;
}

inline bool GetFixed8(std::string_view* input, uint8_t* value) {
  if (input->empty()) return false;
  *value = static_cast<uint8_t>((*input)[0]);
  input->remove_prefix(1);
  return true;
}

inline bool GetLengthPrefixed(std::string_view* input, std::string_view* out) {
  uint32_t len;
  if (!GetFixed32(input, &len)) return false;
  if (input->size() < len) return false;
  *out = input->substr(0, len);
  input->remove_prefix(len);
  return true;
}

}  // namespace dentrykv

#endif  // DENTRYKV_UTIL_CODING_H_
