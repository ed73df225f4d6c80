// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Keys are arbitrary byte strings; on disk each key becomes a filename.
// Bytes in the safe set [A-Z a-z 0-9 _ - + = @] pass through, every other
// byte is percent-encoded as '%' plus two uppercase hex digits. No encoded
// name can start with '.', which reserves dot-prefixed names (".meta") for
// the store itself.
//
// The encoding is injective but NOT order-preserving: "a/b" < "a0b" as raw
// bytes yet "a%2Fb" > "a0b" as filenames. All ordering logic must compare
// decoded keys, never filenames.

#ifndef DENTRYKV_CORE_KEY_CODEC_H_
#define DENTRYKV_CORE_KEY_CODEC_H_

#include <string>
#include <string_view>

#include "dentrykv/status.h"

namespace dentrykv {

// Longest allowed encoded filename. Worst case a raw key of 85 bytes fits
// even when every byte needs escaping.
constexpr size_t kMaxEncodedKey = 255;

// Bytewise lexicographic ordering (unsigned bytes): negative, zero, or
// positive like memcmp.
int CompareKeys(std::string_view a, std::string_view b);

// Errors: EmptyKey; KeyTooLong when the encoded form exceeds 255 bytes.
Status EncodeKey(std::string_view key, std::string* name);

// Exact inverse of EncodeKey. Rejects anything EncodeKey cannot produce:
// bytes outside the safe set, bare or ill-formed '%' escapes (lowercase hex
// included), and names starting with '.'.
Status DecodeKey(std::string_view name, std::string* key);

// True when `key` would encode without error (same checks as EncodeKey).
Status ValidateKey(std::string_view key);

}  // namespace dentrykv

#endif  // DENTRYKV_CORE_KEY_CODEC_H_
