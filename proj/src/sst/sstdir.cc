// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "sst/sstdir.h"

#include <algorithm>

#include "core/filenames.h"
#include "core/key_codec.h"
#include "util/coding.h"
#include "util/crc32c.h"

namespace dentrykv {

namespace {
constexpr char kMetaName[] = ".meta";
constexpr char kMetaMagic[4] = {'D', 'L', 'M', '1'};
}  // namespace

std::string EncodeSstDirMeta(const SstDirMeta& meta) {
  std::string out;
  out.append(kMetaMagic, 4);
  PutFixed64(&out, meta.entry_count);
  PutFixed32(&out, meta.bits_per_key);
  PutFixed32(&out, meta.num_hashes);
  PutFixed64(&out, meta.bloom.bit_len());
  out.append(meta.bloom.bits());
  PutLengthPrefixed(&out, meta.smallest);
  PutLengthPrefixed(&out, meta.largest);
  PutFixed32(&out, crc32c::Value(out));
  return out;
}

Status DecodeSstDirMeta(std::string_view input, SstDirMeta* meta) {
  const auto corrupt = [](const char* what) {
    return Status::Corruption(std::string("meta file: ") + what);
  };
  if (input.size() < 4 + 8 + 4 + 4 + 8 + 4 + 4 + 4) {
    return corrupt("too short");
  }
  const uint32_t expected = DecodeFixed32(input.data() + input.size() - 4);
  const uint32_t actual = crc32c::Value(input.data(), input.size() - 4);
  if (expected != actual) return corrupt("crc mismatch");
  std::string_view in = input.substr(0, input.size() - 4);
  if (std::memcmp(in.data(), kMetaMagic, 4) != 0) return corrupt("bad magic");
  in.remove_prefix(4);
  uint64_t bit_len;
  if (!GetFixed64(&in, &meta->entry_count) ||
      !GetFixed32(&in, &meta->bits_per_key) ||
      !GetFixed32(&in, &meta->num_hashes) || !GetFixed64(&in, &bit_len)) {
    return corrupt("truncated header");
  }
  const uint64_t nbytes = (bit_len + 7) / 8;
  if (in.size() < nbytes) return corrupt("truncated bits");
  std::string bits(in.substr(0, nbytes));
  in.remove_prefix(nbytes);
  meta->bloom = BloomFilter(bit_len, meta->num_hashes, std::move(bits));
  std::string_view smallest, largest;
  if (!GetLengthPrefixed(&in, &smallest) || !GetLengthPrefixed(&in, &largest) ||
      !in.empty()) {
    return corrupt("truncated keys");
  }
  meta->smallest.assign(smallest);
  meta->largest.assign(largest);
  return Status::OK();
}

Status SstDirWriter::Create(StoreRoot* root, int level, uint64_t dir_no,
                            uint32_t bits_per_key, uint32_t num_hashes,
                            std::unique_ptr<SstDirWriter>* out) {
  std::string dir = SstDirName(level, dir_no);
  Status s = root->CreateDir(dir);
  if (!s.ok()) return s;
  out->reset(new SstDirWriter(root, level, dir_no, bits_per_key, num_hashes,
                              std::move(dir)));
  return Status::OK();
}

Status SstDirWriter::CheckOrder(std::string_view key, std::string* encoded) {
  if (finished_) return Status::InvalidArgument("writer already finished");
  if (!keys_.empty() && CompareKeys(key, keys_.back()) <= 0) {
    return Status::InvalidArgument("keys out of order in sst dir writer");
  }
  return EncodeKey(key, encoded);
}

Status SstDirWriter::Add(std::string_view key,
                         const std::vector<KvRecord>& records) {
  std::string encoded;
  Status s = CheckOrder(key, &encoded);
  if (!s.ok()) return s;
  std::string data;
  for (const KvRecord& r : records) AppendRecord(&data, r);
  s = root_->WriteFileExcl(dir_ + "/" + encoded, data);
  if (!s.ok()) return s;
  payload_bytes_ += data.size();
  keys_.emplace_back(key);
  return Status::OK();
}

Status SstDirWriter::Link(std::string_view key, std::string_view src_rel_path) {
  std::string encoded;
  Status s = CheckOrder(key, &encoded);
  if (!s.ok()) return s;
  s = root_->HardLink(src_rel_path, dir_ + "/" + encoded);
  if (!s.ok()) return s;
  keys_.emplace_back(key);
  return Status::OK();
}

Status SstDirWriter::Finish(SstDirMeta* meta) {
  if (finished_) return Status::InvalidArgument("writer already finished");
  finished_ = true;
  meta->entry_count = keys_.size();
  meta->bits_per_key = bits_per_key_;
  meta->num_hashes = num_hashes_;
  meta->bloom = BloomFilter(keys_.size(), bits_per_key_, num_hashes_);
  for (const std::string& k : keys_) meta->bloom.Add(k);
  if (!keys_.empty()) {
    meta->smallest = keys_.front();
    meta->largest = keys_.back();
  }
  const std::string encoded = EncodeSstDirMeta(*meta);
  Status s = root_->WriteFileExcl(dir_ + "/" + kMetaName, encoded);
  if (!s.ok()) return s;
  meta_bytes_ = encoded.size();
  return Status::OK();
}

Status SstDirReader::Open(StoreRoot* root, int level, uint64_t dir_no,
                          uint32_t bits_per_key, uint32_t num_hashes,
                          std::shared_ptr<SstDirReader>* out) {
  std::string dir = SstDirName(level, dir_no);
  std::shared_ptr<SstDirReader> reader(
      new SstDirReader(root, level, dir_no, std::move(dir)));
  std::string raw;
  Status s = root->ReadFile(reader->dir_ + "/" + kMetaName, &raw);
  if (s.ok()) s = DecodeSstDirMeta(raw, &reader->meta_);
  if (!s.ok()) {
    // Filenames alone carry the keys, so a lost or torn meta is recoverable.
    s = RebuildSstDirMeta(root, level, dir_no, bits_per_key, num_hashes,
                          &reader->meta_);
    if (!s.ok()) return s;
  }
  *out = std::move(reader);
  return Status::OK();
}

Status SstDirReader::KvFilePath(std::string_view key,
                                std::string* rel_path) const {
  std::string encoded;
  Status s = EncodeKey(key, &encoded);
  if (!s.ok()) return s;
  *rel_path = dir_ + "/" + encoded;
  return Status::OK();
}

Status SstDirReader::RecordsFor(std::string_view key,
                                std::vector<KvRecord>* recs, bool* found) {
  *found = false;
  recs->clear();
  if (!MayContain(key)) return Status::OK();
  std::string path;
  Status s = KvFilePath(key, &path);
  if (!s.ok()) return s;
  std::string data;
  s = root_->ReadFile(path, &data);
  if (s.IsNotFound()) return Status::OK();
  if (!s.ok()) return s;
  s = DecodeRecords(data, recs);
  if (!s.ok()) return s;
  for (size_t i = 1; i < recs->size(); i++) {
    if ((*recs)[i].seq <= (*recs)[i - 1].seq) {
      return Status::Corruption("records out of seq order in " + path);
    }
  }
  *found = !recs->empty();
  if (recs->empty()) {
    return Status::Corruption("empty kv file " + path);
  }
  return Status::OK();
}

Status SstDirReader::Keys(std::vector<std::string>* keys) {
  std::vector<std::string> names;
  Status s = root_->ListDir(dir_, &names);
  if (!s.ok()) return s;
  keys->clear();
  keys->reserve(names.size());
  for (const std::string& name : names) {
    if (name == kMetaName) continue;
    std::string key;
    s = DecodeKey(name, &key);
    if (!s.ok()) return s;
    keys->push_back(std::move(key));
  }
  std::sort(keys->begin(), keys->end());
  return Status::OK();
}

Status RebuildSstDirMeta(StoreRoot* root, int level, uint64_t dir_no,
                         uint32_t bits_per_key, uint32_t num_hashes,
                         SstDirMeta* meta) {
  const std::string dir = SstDirName(level, dir_no);
  std::vector<std::string> names;
  Status s = root->ListDir(dir, &names);
  if (!s.ok()) return s;
  std::vector<std::string> keys;
  for (const std::string& name : names) {
    if (name == kMetaName) continue;
    std::string key;
    s = DecodeKey(name, &key);
    if (!s.ok()) return s;
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  meta->entry_count = keys.size();
  meta->bits_per_key = bits_per_key;
  meta->num_hashes = num_hashes;
  meta->bloom = BloomFilter(keys.size(), bits_per_key, num_hashes);
  for (const std::string& k : keys) meta->bloom.Add(k);
  meta->smallest = keys.empty() ? "" : keys.front();
  meta->largest = keys.empty() ? "" : keys.back();
  const std::string encoded = EncodeSstDirMeta(*meta);
  const std::string meta_path = dir + "/" + kMetaName;
  if (root->Exists(meta_path)) {
    s = root->RemoveFile(meta_path);
    if (!s.ok()) return s;
  }
  return root->WriteFileExcl(meta_path, encoded);
}

Status RemoveSstDir(StoreRoot* root, int level, uint64_t dir_no) {
  const std::string dir = SstDirName(level, dir_no);
  std::vector<std::string> names;
  Status s = root->ListDir(dir, &names);
  if (!s.ok()) return s;
  for (const std::string& name : names) {
    s = root->RemoveFile(dir + "/" + name);
    if (!s.ok()) return s;
  }
  return root->RemoveDir(dir);
}

}  // namespace dentrykv
