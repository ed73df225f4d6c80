// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "sst/packed_table.h"

#include <algorithm>

#include "core/filenames.h"
#include "core/key_codec.h"
#include "util/coding.h"

namespace dentrykv {

namespace {
constexpr char kMagic[4] = {'P', 'K', 'T', '1'};
}

PackedTableBuilder::PackedTableBuilder(StoreRoot* root, int level,
                                       uint64_t file_no, uint32_t bits_per_key,
                                       uint32_t num_hashes)
    : root_(root),
      level_(level),
      file_no_(file_no),
      bits_per_key_(bits_per_key),
      num_hashes_(num_hashes) {}

Status PackedTableBuilder::Add(std::string_view key,
                               const std::vector<KvRecord>& records) {
  if (finished_) return Status::InvalidArgument("builder already finished");
  if (!index_.empty() && CompareKeys(key, index_.back().key) <= 0) {
    return Status::InvalidArgument("keys out of order in packed builder");
  }
  IndexEntry e;
  e.key.assign(key);
  e.offset = data_.size();
  for (const KvRecord& r : records) AppendRecord(&data_, r);
  e.length = static_cast<uint32_t>(data_.size() - e.offset);
  index_.push_back(std::move(e));
  if (index_.size() == 1) smallest_.assign(key);
  largest_.assign(key);
  return Status::OK();
}

Status PackedTableBuilder::Finish() {
  if (finished_) return Status::InvalidArgument("builder already finished");
  finished_ = true;
  payload_bytes_ = data_.size();
  std::string file = std::move(data_);
  const uint64_t index_off = file.size();
  for (const IndexEntry& e : index_) {
    PutLengthPrefixed(&file, e.key);
    PutFixed64(&file, e.offset);
    PutFixed32(&file, e.length);
  }
  const uint64_t index_len = file.size() - index_off;
  BloomFilter bloom(index_.size(), bits_per_key_, num_hashes_);
  for (const IndexEntry& e : index_) bloom.Add(e.key);
  const uint64_t bloom_off = file.size();
  PutFixed64(&file, bloom.bit_len());
  PutFixed32(&file, bloom.num_hashes());
  file.append(bloom.bits());
  const uint64_t bloom_len = file.size() - bloom_off;
  const uint64_t footer_off = file.size();
  PutLengthPrefixed(&file, smallest_);
  PutLengthPrefixed(&file, largest_);
  PutFixed64(&file, static_cast<uint64_t>(index_.size()));
  PutFixed64(&file, index_off);
  PutFixed64(&file, index_len);
  PutFixed64(&file, bloom_off);
  PutFixed64(&file, bloom_len);
  PutFixed32(&file, static_cast<uint32_t>(file.size() - footer_off));
  file.append(kMagic, 4);
  meta_bytes_ = file.size() - index_off;
  return root_->WriteFileExcl(PackedFileName(level_, file_no_), file);
}

Status PackedTableReader::Open(StoreRoot* root, int level, uint64_t file_no,
                               std::shared_ptr<PackedTableReader>* out) {
  std::string path = PackedFileName(level, file_no);
  std::shared_ptr<PackedTableReader> reader(
      new PackedTableReader(root, level, file_no, std::move(path)));
  const auto corrupt = [&](const char* what) {
    return Status::Corruption("packed table " + reader->path_ + ": " + what);
  };
  uint64_t size;
  Status s = root->FileSize(reader->path_, &size);
  if (!s.ok()) return s;
  if (size < 8) return corrupt("too short");
  std::string trailer;
  s = root->ReadAt(reader->path_, size - 8, 8, &trailer);
  if (!s.ok()) return s;
  if (std::memcmp(trailer.data() + 4, kMagic, 4) != 0) {
    return corrupt("bad magic");
  }
  const uint32_t footer_len = DecodeFixed32(trailer.data());
  if (footer_len + 8 > size) return corrupt("bad footer length");
  std::string footer;
  s = root->ReadAt(reader->path_, size - 8 - footer_len, footer_len, &footer);
  if (!s.ok()) return s;
  std::string_view in(footer);
  std::string_view smallest, largest;
  uint64_t index_off, index_len, bloom_off, bloom_len;
  if (!GetLengthPrefixed(&in, &smallest) || !GetLengthPrefixed(&in, &largest) ||
      !GetFixed64(&in, &reader->entry_count_) || !GetFixed64(&in, &index_off) ||
      !GetFixed64(&in, &index_len) || !GetFixed64(&in, &bloom_off) ||
      !GetFixed64(&in, &bloom_len) || !in.empty()) {
    return corrupt("bad footer");
  }
  reader->smallest_.assign(smallest);
  reader->largest_.assign(largest);

  std::string index_raw;
  s = root->ReadAt(reader->path_, index_off, index_len, &index_raw);
  if (!s.ok()) return s;
  std::string_view iv(index_raw);
  reader->index_.reserve(reader->entry_count_);
  while (!iv.empty()) {
    IndexEntry e;
    std::string_view key;
    if (!GetLengthPrefixed(&iv, &key) || !GetFixed64(&iv, &e.offset)) {
      return corrupt("bad index");
    }
    uint32_t length;
    if (!GetFixed32(&iv, &length)) return corrupt("bad index");
    e.key.assign(key);
    e.length = length;
    reader->index_.push_back(std::move(e));
  }
  if (reader->index_.size() != reader->entry_count_) {
    return corrupt("index count mismatch");
  }

  std::string bloom_raw;
  s = root->ReadAt(reader->path_, bloom_off, bloom_len, &bloom_raw);
  if (!s.ok()) return s;
  std::string_view bv(bloom_raw);
  uint64_t bit_len;
  uint32_t num_hashes;
  if (!GetFixed64(&bv, &bit_len) || !GetFixed32(&bv, &num_hashes) ||
      bv.size() != (bit_len + 7) / 8) {
    return corrupt("bad bloom");
  }
  reader->bloom_ = BloomFilter(bit_len, num_hashes, std::string(bv));

  *out = std::move(reader);
  return Status::OK();
}

Status PackedTableReader::RecordsFor(std::string_view key,
                                     std::vector<KvRecord>* recs,
                                     bool* found) {
  *found = false;
  recs->clear();
  if (!MayContain(key)) return Status::OK();
  auto it = std::lower_bound(
      index_.begin(), index_.end(), key,
      [](const IndexEntry& e, std::string_view k) {
        return CompareKeys(e.key, k) < 0;
      });
  if (it == index_.end() || CompareKeys(it->key, key) != 0) return Status::OK();
  std::string data;
  Status s = root_->ReadAt(path_, it->offset, it->length, &data);
  if (!s.ok()) return s;
  s = DecodeRecords(data, recs);
  if (!s.ok()) return s;
  if (recs->empty()) {
    return Status::Corruption("empty record group in " + path_);
  }
  *found = true;
  return Status::OK();
}

Status PackedTableReader::Keys(std::vector<std::string>* keys) {
  keys->clear();
  keys->reserve(index_.size());
  for (const IndexEntry& e : index_) keys->push_back(e.key);
  return Status::OK();
}

}  // namespace dentrykv
