// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Directory-level Bloom filter: if it reports not-present, no KV file in
// the directory can hold the key, so the read path skips the directory
// without touching its entries.
//
// The scheme is double hashing over FNV-1a. For a filter of m bits with k
// probes, the probe positions for a key are
//
//    g_i = (h1 + i * h2) mod m,   i in [0, k)
//    h1  = FNV-1a-64(key)
//    h2  = FNV-1a-64(key || 0xFF) | 1
//
// with m = max(64, n * bits_per_key). This layout is baked into the .meta
// wire format; changing it invalidates every filter on disk.

#ifndef DENTRYKV_SST_BLOOM_H_
#define DENTRYKV_SST_BLOOM_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace dentrykv {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr uint64_t kFnvPrime = 0x100000001b3ull;

inline uint64_t Fnv1a64(std::string_view data) {
  uint64_t h = kFnvOffset;
  for (char c : data) {
    h ^= static_cast<uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

inline uint64_t BloomH1(std::string_view key) { return Fnv1a64(key); }

inline uint64_t BloomH2(std::string_view key) {
  uint64_t h = Fnv1a64(key);
  h ^= 0xFF;
  h *= kFnvPrime;
  return h | 1;
}

class BloomFilter {
 public:
  // Empty filter: zero bits, every query answers not-present.
  BloomFilter() = default;

  // Sized for n keys; keys are added afterwards.
  BloomFilter(uint64_t n, uint32_t bits_per_key, uint32_t num_hashes);

  // Adopts bits read back from a .meta file.
  BloomFilter(uint64_t bit_len, uint32_t num_hashes, std::string bits);

  void Add(std::string_view key);
  bool MayContain(std::string_view key) const;

  uint64_t bit_len() const { return bit_len_; }
  uint32_t num_hashes() const { return num_hashes_; }
  const std::string& bits() const { return bits_; }

 private:
  uint64_t bit_len_ = 0;
  uint32_t num_hashes_ = 0;
  std::string bits_;
};

}  // namespace dentrykv

#endif  // DENTRYKV_SST_BLOOM_H_
