// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_UTIL_CRC32C_H_
#define DENTRYKV_UTIL_CRC32C_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dentrykv {
namespace crc32c {

// Returns the crc32c (Castagnoli) of data[0, n-1], seeded with `init_crc`
// (the crc of a preceding chunk, 0 for a fresh computation).
uint32_t Extend(uint32_t init_crc, const char* data, size_t n);

inline uint32_t Value(const char* data, size_t n) { return Extend(0, data, n); }

inline uint32_t Value(std::string_view s) { return Extend(0, s.data(), s.size()); }

}  // namespace crc32c
}  // namespace dentrykv

#endif  // DENTRYKV_UTIL_CRC32C_H_
