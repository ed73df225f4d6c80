// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "sst/bloom.h"

#include <algorithm>

namespace dentrykv {

BloomFilter::BloomFilter(uint64_t n, uint32_t bits_per_key,
                         uint32_t num_hashes)
    : bit_len_(std::max<uint64_t>(64, n * bits_per_key)),
      num_hashes_(num_hashes) {
  bits_.assign((bit_len_ + 7) / 8, '\0');
}

BloomFilter::BloomFilter(uint64_t bit_len, uint32_t num_hashes,
                         std::string bits)
    : bit_len_(bit_len), num_hashes_(num_hashes), bits_(std::move(bits)) {}

void BloomFilter::Add(std::string_view key) {
  if (bit_len_ == 0) return;
  const uint64_t h1 = BloomH1(key);
  const uint64_t h2 = BloomH2(key);
  uint8_t* bytes = reinterpret_cast<uint8_t*>(bits_.data());
  for (uint32_t i = 0; i < num_hashes_; i++) {
    const uint64_t pos = (h1 + i * h2) % bit_len_;
    bytes[pos / 8] |= static_cast<uint8_t>(1u << (pos % 8));
  }
}

bool BloomFilter::MayContain(std::string_view key) const {
  if (bit_len_ == 0) return false;
  const uint64_t h1 = BloomH1(key);
  const uint64_t h2 = BloomH2(key);
  const uint8_t* bytes = reinterpret_cast<const uint8_t*>(bits_.data());
  for (uint32_t i = 0; i < num_hashes_; i++) {
    const uint64_t pos = (h1 + i * h2) % bit_len_;
    if ((bytes[pos / 8] & (1u << (pos % 8))) == 0) return false;
  }
  return true;
}

}  // namespace dentrykv
