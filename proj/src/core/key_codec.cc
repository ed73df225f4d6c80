// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "core/key_codec.h"

#include <cstring>

namespace dentrykv {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

inline bool IsSafe(uint8_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '+' ||
         c == '=' || c == '@';
}

// -1 unless c is an uppercase hex digit.
inline int HexValue(uint8_t c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

int CompareKeys(std::string_view a, std::string_view b) {
  const size_t n = std::min(a.size(), b.size());
  int r = (n == 0) ? 0 : std::memcmp(a.data(), b.data(), n);
  if (r == 0) {
    if (a.size() < b.size()) r = -1;
    else if (a.size() > b.size()) r = +1;
  }
  return r;
}

Status EncodeKey(std::string_view key, std::string* name) {
  if (key.empty()) return Status::EmptyKey("key is empty");
  name->clear();
  name->reserve(key.size());
  for (char ch : key) {
    uint8_t c = static_cast<uint8_t>(ch);
    if (IsSafe(c)) {
      name->push_back(ch);
    } else {
      name->push_back('%');
      name->push_back(kHexDigits[c >> 4]);
      name->push_back(kHexDigits[c & 0xF]);
    }
    if (name->size() > kMaxEncodedKey) {
      return Status::KeyTooLong("key encodes past 255 bytes, shorten it: " +
                                std::string(key));
    }
  }
  return Status::OK();
}

Status DecodeKey(std::string_view name, std::string* key) {
  if (name.empty()) return Status::MalformedName("empty filename");
  if (name.front() == '.') {
    return Status::MalformedName("reserved dot-prefixed name: " +
                                 std::string(name));
  }
  key->clear();
  key->reserve(name.size());
  for (size_t i = 0; i < name.size();) {
    uint8_t c = static_cast<uint8_t>(name[i]);
    if (c == '%') {
      if (i + 3 > name.size()) {
        return Status::MalformedName("truncated escape in: " +
                                     std::string(name));
      }
      int hi = HexValue(static_cast<uint8_t>(name[i + 1]));
      int lo = HexValue(static_cast<uint8_t>(name[i + 2]));
      if (hi < 0 || lo < 0) {
        return Status::MalformedName("bad hex escape in: " +
                                     std::string(name));
      }
      key->push_back(static_cast<char>((hi << 4) | lo));
      i += 3;
    } else if (IsSafe(c)) {
      key->push_back(static_cast<char>(c));
      i += 1;
    } else {
      return Status::MalformedName("unencoded byte in: " + std::string(name));
    }
  }
  return Status::OK();
}

Status ValidateKey(std::string_view key) {
  std::string scratch;
  return EncodeKey(key, &scratch);
}

}  // namespace dentrykv
