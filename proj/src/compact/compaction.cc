// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "compact/compaction.h"

#include <algorithm>
#include <cassert>

#include "core/filenames.h"
#include "core/key_codec.h"
#include "sst/packed_table.h"
#include "sst/sstdir.h"

namespace dentrykv {

namespace {

// One output run under construction. Wraps the two engine builders behind
// the operations major compaction needs.
class OutputRun {
 public:
  OutputRun(StoreRoot* root, EngineKind kind, int level, uint64_t number,
            const Options& options)
      : kind_(kind), level_(level), number_(number) {
    if (kind_ == EngineKind::kDentry) {
      // Creation can fail (dir exists); surfaced on first use.
      create_status_ = SstDirWriter::Create(root, level, number,
                                            options.bloom_bits_per_key,
                                            options.bloom_num_hashes, &dir_);
    } else {
      packed_ = std::make_unique<PackedTableBuilder>(
          root, level, number, options.bloom_bits_per_key,
          options.bloom_num_hashes);
    }
  }

  Status Add(std::string_view key, const std::vector<KvRecord>& records) {
    if (!create_status_.ok()) return create_status_;
    NoteKey(key);
    if (kind_ == EngineKind::kDentry) return dir_->Add(key, records);
    return packed_->Add(key, records);
  }

  // Dentry only: move the surviving KV file by hard link.
  Status Link(std::string_view key, std::string_view src_rel_path) {
    if (!create_status_.ok()) return create_status_;
    assert(kind_ == EngineKind::kDentry);
    NoteKey(key);
    return dir_->Link(key, src_rel_path);
  }

  Status Finish() {
    if (!create_status_.ok()) return create_status_;
    if (kind_ == EngineKind::kDentry) {
      SstDirMeta meta;
      return dir_->Finish(&meta);
    }
    return packed_->Finish();
  }

  uint64_t number() const { return number_; }
  int level() const { return level_; }
  uint64_t entry_count() const {
    return kind_ == EngineKind::kDentry ? dir_->entry_count()
                                        : packed_->entry_count();
  }
  uint64_t payload_bytes() const {
    return kind_ == EngineKind::kDentry ? dir_->payload_bytes()
                                        : packed_->payload_bytes();
  }
  uint64_t meta_bytes() const {
    return kind_ == EngineKind::kDentry ? dir_->meta_bytes()
                                        : packed_->meta_bytes();
  }
  const std::string& smallest() const { return smallest_; }
  const std::string& largest() const { return largest_; }

 private:
  void NoteKey(std::string_view key) {
    if (smallest_.empty() && largest_.empty() && entry_count() == 0) {
      smallest_.assign(key);
    }
    largest_.assign(key);
  }

  const EngineKind kind_;
  const int level_;
  const uint64_t number_;
  Status create_status_;
  std::unique_ptr<SstDirWriter> dir_;
  std::unique_ptr<PackedTableBuilder> packed_;
  std::string smallest_;
  std::string largest_;
};

// One compaction input with its key list and a cursor for the merge walk.
struct InputRun {
  HandleRef handle;
  std::shared_ptr<TableReader> reader;
  std::vector<std::string> keys;
  size_t cursor = 0;
};

}  // namespace

size_t ResolveWinner(const std::vector<std::vector<KvRecord>>& contenders) {
  assert(!contenders.empty());
  size_t best = 0;
  uint64_t best_seq = 0;
  for (size_t i = 0; i < contenders.size(); i++) {
    assert(!contenders[i].empty());
    uint64_t seq = contenders[i].back().seq;
    if (i == 0 || seq > best_seq) {
      best = i;
      best_seq = seq;
    }
  }
  return best;
}

std::vector<KvRecord> RetainedRecords(
    const std::vector<std::vector<KvRecord>>& contenders,
    uint64_t snapshot_floor) {
  std::vector<KvRecord> all;
  for (const auto& list : contenders) {
    all.insert(all.end(), list.begin(), list.end());
  }
  std::sort(all.begin(), all.end(),
            [](const KvRecord& a, const KvRecord& b) { return a.seq < b.seq; });
  // First record at or above the floor; the one just before it is the
  // newest a floor-pinned snapshot can still observe.
  size_t first = all.size();
  for (size_t i = 0; i < all.size(); i++) {
    if (all[i].seq >= snapshot_floor) {
      first = i;
      break;
    }
  }
  if (first > 0) first--;
  return std::vector<KvRecord>(all.begin() + first, all.end());
}

bool ShouldDropTombstone(std::string_view key, int output_level,
                         const Version& version) {
  if (output_level >= version.max_level()) return true;
  return !version.KeyCoveredBelow(output_level, key);
}

bool Compactor::CrashPoint(std::string_view point) {
  if (env_.hooks && env_.hooks->stage) env_.hooks->stage(point);
  if (env_.hooks && env_.hooks->crash_point &&
      env_.hooks->crash_point(point)) {
    return true;
  }
  return false;
}

Status Compactor::InjectCrash(std::string_view point) {
  // From this instant nothing may touch the disk again, including the
  // deferred deleters that would otherwise tidy up retired runs.
  if (env_.deleter) {
    env_.deleter->crashed.store(true, std::memory_order_release);
  }
  return Status::InjectedCrash(std::string(point));
}

Status Compactor::MinorCompact(const Memtable& table,
                               uint64_t log_number_after, uint64_t max_seq) {
  if (CrashPoint("minor.begin")) return InjectCrash("minor.begin");

  VersionEdit edit;
  edit.log_number = log_number_after;

  if (!table.empty()) {
    const Memtable::EntryMap& entries = table.sealed_entries();
    uint64_t number = env_.versions->NewFileNumber();
    OutputRun out(env_.root, env_.kind, 0, number, *env_.options);
    for (const auto& [key, records] : entries) {
      Status s = out.Add(key, records);
      if (!s.ok()) return s;
    }
    Status s = out.Finish();
    if (!s.ok()) return s;
    edit.AddRun(0, number, static_cast<uint32_t>(entries.size()),
                entries.begin()->first, entries.rbegin()->first);
    edit.last_seq = max_seq;
    if (CrashPoint("minor.dir_written")) {
      return InjectCrash("minor.dir_written");
    }
  }

  Status s = env_.versions->LogAndApply(&edit);
  if (!s.ok()) return s;
  {
    std::lock_guard<std::mutex> lock(stats_mu_);
    stats_.minor_compactions++;
  }
  if (CrashPoint("minor.committed")) return InjectCrash("minor.committed");
  return Status::OK();
}

Status Compactor::MajorCompact(const VersionSet::Job& job) {
  if (CrashPoint("major.begin")) return InjectCrash("major.begin");

  const uint64_t floor =
      env_.snapshot_floor ? env_.snapshot_floor() : kMaxSequence;
  std::shared_ptr<const Version> base = env_.versions->current();
  // A job at the bottom level merges the level into itself; that is how a
  // full compaction prunes variants that released snapshots no longer pin.
  const int output_level = std::min(job.level + 1, env_.options->max_level);

  std::vector<InputRun> inputs;
  inputs.reserve(job.upper.size() + job.lower.size());
  for (const auto& h : job.upper) inputs.push_back({h, nullptr, {}, 0});
  for (const auto& h : job.lower) inputs.push_back({h, nullptr, {}, 0});

  std::vector<std::string> merged;
  for (auto& in : inputs) {
    Status s = env_.open_reader(in.handle->level, in.handle->number,
                                &in.reader);
    if (!s.ok()) return s;
    s = in.reader->Keys(&in.keys);
    if (!s.ok()) return s;
    merged.insert(merged.end(), in.keys.begin(), in.keys.end());
  }
  std::sort(merged.begin(), merged.end(),
            [](const std::string& a, const std::string& b) {
              return CompareKeys(a, b) < 0;
            });
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (CrashPoint("major.inputs_scanned")) {
    return InjectCrash("major.inputs_scanned");
  }

  struct Finished {
    uint64_t number;
    uint32_t entry_count;
    std::string smallest;
    std::string largest;
  };
  std::vector<Finished> outputs;
  std::unique_ptr<OutputRun> out;
  uint64_t payload = 0;
  uint64_t meta = 0;
  uint64_t linked = 0;
  uint64_t rewritten = 0;
  bool announced_first_output = false;

  auto finish_output = [&]() -> Status {
    if (!out) return Status::OK();
    Status s = out->Finish();
    if (!s.ok()) return s;
    outputs.push_back({out->number(),
                       static_cast<uint32_t>(out->entry_count()),
                       out->smallest(), out->largest()});
    payload += out->payload_bytes();
    meta += out->meta_bytes();
    out.reset();
    return Status::OK();
  };

  std::vector<std::vector<KvRecord>> contenders;
  std::vector<size_t> contender_inputs;
  for (const std::string& key : merged) {
    contenders.clear();
    contender_inputs.clear();
    for (size_t i = 0; i < inputs.size(); i++) {
      InputRun& in = inputs[i];
      while (in.cursor < in.keys.size() &&
             CompareKeys(in.keys[in.cursor], key) < 0) {
        in.cursor++;
      }
      if (in.cursor < in.keys.size() && in.keys[in.cursor] == key) {
        std::vector<KvRecord> records;
        bool found = false;
        Status s = in.reader->RecordsFor(key, &records, &found);
        if (!s.ok()) return s;
        if (!found || records.empty()) {
          return Status::Corruption("compaction input lost key " + key);
        }
        contenders.push_back(std::move(records));
        contender_inputs.push_back(i);
      }
    }
    if (contenders.empty()) {
      return Status::Corruption("merged key missing from every input: " + key);
    }

    std::vector<KvRecord> retained = RetainedRecords(contenders, floor);
    if (retained.size() == 1 && retained[0].op == OpCode::kDelete &&
        ShouldDropTombstone(key, output_level, *base)) {
      continue;
    }

    if (!out) {
      out = std::make_unique<OutputRun>(env_.root, env_.kind, output_level,
                                        env_.versions->NewFileNumber(),
                                        *env_.options);
    }

    // The survivors may already be, byte for byte, the full contents of
    // one input KV file; then the dentry engine moves that file by link.
    size_t link_from = contenders.size();
    if (env_.kind == EngineKind::kDentry) {
      for (size_t i = 0; i < contenders.size(); i++) {
        if (contenders[i] == retained) {
          link_from = i;
          break;
        }
      }
    }
    Status s;
    if (link_from < contenders.size()) {
      const InputRun& src = inputs[contender_inputs[link_from]];
      std::string encoded;
      s = EncodeKey(key, &encoded);
      if (s.ok()) {
        s = out->Link(key, SstDirName(src.handle->level,
                                      src.handle->number) +
                               "/" + encoded);
      }
      if (s.ok()) linked++;
    } else {
      s = out->Add(key, retained);
      if (s.ok()) rewritten++;
    }
    if (!s.ok()) return s;

    if (out->entry_count() >= env_.options->sstdir_file_target) {
      s = finish_output();
      if (!s.ok()) return s;
      if (!announced_first_output) {
        announced_first_output = true;
        if (CrashPoint("major.one_output_written")) {
          return InjectCrash("major.one_output_written");
        }
      }
    }
  }
  Status s = finish_output();
  if (!s.ok()) return s;
  if (!announced_first_output && !outputs.empty()) {
    if (CrashPoint("major.one_output_written")) {
      return InjectCrash("major.one_output_written");
    }
  }
  if (CrashPoint("major.outputs_done")) {
    return InjectCrash("major.outputs_done");
  }

  VersionEdit edit;
  for (const Finished& f : outputs) {
    edit.AddRun(output_level, f.number, f.entry_count, f.smallest, f.largest);
  }
  for (const auto& in : inputs) {
    edit.RemoveRun(in.handle->level, in.handle->number);
  }
  s = env_.versions->LogAndApply(&edit);
  if (!s.ok()) return s;

  {
    std::lock_guard<std::mutex> lock(stats_mu_);
    stats_.major_compactions++;
    stats_.major_payload_bytes += payload;
    stats_.major_meta_bytes += meta;
    stats_.major_files_linked += linked;
    stats_.major_files_rewritten += rewritten;
  }
  if (CrashPoint("major.committed")) return InjectCrash("major.committed");

  if (env_.on_runs_retired) {
    std::vector<HandleRef> retired;
    retired.reserve(inputs.size());
    for (const auto& in : inputs) retired.push_back(in.handle);
    env_.on_runs_retired(retired);
  }
  if (CrashPoint("major.inputs_removed")) {
    return InjectCrash("major.inputs_removed");
  }
  return Status::OK();
}

CompactionStats Compactor::stats() const {
  std::lock_guard<std::mutex> lock(stats_mu_);
  return stats_;
}

}  // namespace dentrykv
