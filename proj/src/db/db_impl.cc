// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "db/db_impl.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <limits>
#include <map>
#include <unordered_set>

#include "core/filenames.h"
#include "core/key_codec.h"
#include "sst/packed_table.h"
#include "sst/sstdir.h"

namespace dentrykv {

class DbImpl::SnapshotImpl : public Snapshot {
 public:
  explicit SnapshotImpl(uint64_t seq) : Snapshot(seq) {}
  ~SnapshotImpl() = default;
  bool released = false;
};

Status DB::Open(const Options& options, const std::string& path,
                std::unique_ptr<DB>* out) {
  Status s = options.Validate();
  if (!s.ok()) return s;
  auto impl = std::make_unique<DbImpl>(options, path);
  s = impl->Recover();
  if (!s.ok()) return s;
  *out = std::move(impl);
  return Status::OK();
}

DbImpl::DbImpl(const Options& options, std::string path)
    : options_(options),
      path_(std::move(path)),
      value_cache_(options.value_cache_bytes),
      handle_cache_(options.handle_cache_entries) {}

DbImpl::~DbImpl() {
  if (!closed_.load(std::memory_order_acquire)) Close();
  StopWorker();
}

Status DbImpl::Recover() {
  Status s = StoreRoot::Open(path_, options_.sync_enabled, options_.hooks,
                             &root_);
  if (!s.ok()) return s;
  for (int level = 0; level <= options_.max_level; level++) {
    s = root_->CreateDirIfMissing(LevelDirName(level));
    if (!s.ok()) return s;
  }

  deleter_ = std::make_shared<DeletionContext>();
  deleter_->root = root_.get();
  deleter_->kind = options_.engine;
  versions_ = std::make_unique<VersionSet>(root_.get(), &options_,
                                           options_.engine, deleter_);

  Compactor::Env env;
  env.root = root_.get();
  env.versions = versions_.get();
  env.options = &options_;
  env.kind = options_.engine;
  env.hooks = options_.hooks;
  env.deleter = deleter_;
  env.open_reader = [this](int level, uint64_t number,
                           std::shared_ptr<TableReader>* out) {
    return OpenReader(level, number, out);
  };
  env.snapshot_floor = [this] { return SnapshotFloor(); };
  env.on_runs_retired = [this](const std::vector<HandleRef>& runs) {
    OnRunsRetired(runs);
  };
  compactor_ = std::make_unique<Compactor>(std::move(env));

  std::vector<uint64_t> logs;
  s = versions_->Recover(&logs);
  if (!s.ok()) return s;
  last_seq_.store(versions_->last_seq(), std::memory_order_release);

  // Replay every surviving log in creation order, skipping records already
  // covered by a committed flush.
  auto recovered = std::make_shared<Memtable>();
  uint64_t max_replayed = 0;
  const uint64_t flushed_seq = versions_->last_seq();
  for (uint64_t number : logs) {
    std::vector<WalRecord> records;
    s = ReplayWal(root_.get(), number, &records);
    if (!s.ok()) return s;
    for (const WalRecord& rec : records) {
      if (rec.seq <= flushed_seq) continue;
      s = recovered->Insert(rec.key, KvRecord{rec.seq, rec.op, rec.value});
      if (!s.ok()) return s;
      max_replayed = std::max(max_replayed, rec.seq);
    }
  }
  if (max_replayed > last_seq_.load(std::memory_order_relaxed)) {
    last_seq_.store(max_replayed, std::memory_order_release);
  }

  wal_number_ = versions_->NewFileNumber();
  s = WalWriter::Create(root_.get(), wal_number_, options_.wal_sync_per_write,
                        &wal_);
  if (!s.ok()) return s;
  mem_ = std::make_shared<Memtable>();

  if (!recovered->empty()) {
    // Synchronous flush; its edit also advances the log number, making the
    // replayed logs stale.
    recovered->Seal();
    s = compactor_->MinorCompact(*recovered, wal_number_, max_replayed);
    if (!s.ok()) return s;
  } else {
    VersionEdit edit;
    edit.log_number = wal_number_;
    s = versions_->LogAndApply(&edit);
    if (!s.ok()) return s;
  }
  for (uint64_t number : logs) {
    PendingWal stale{number, std::chrono::steady_clock::now()};
    Status rs;
    MaybeRetireWal(root_.get(), stale, stale.retain_until, &rs);
  }

  if (options_.background_worker) {
    worker_ = std::thread([this] { WorkerLoop(); });
  }
  return Status::OK();
}

Status DbImpl::CheckUsable() const {
  if (crashed_.load(std::memory_order_acquire)) {
    return Status::IOError("store crashed");
  }
  if (closed_.load(std::memory_order_acquire)) {
    return Status::IOError("store is closed");
  }
  return Status::OK();
}

// Write path.

Status DbImpl::Put(std::string_view key, std::string_view value) {
  return WriteInternal(OpCode::kPut, key, value);
}

Status DbImpl::Delete(std::string_view key) {
  return WriteInternal(OpCode::kDelete, key, {});
}

Status DbImpl::WriteInternal(OpCode op, std::string_view key,
                             std::string_view value) {
  Status s = ValidateKey(key);
  if (!s.ok()) return s;
  if (value.size() > std::numeric_limits<uint32_t>::max()) {
    return Status::InvalidArgument("value exceeds 4 GiB record limit");
  }

  std::lock_guard<std::mutex> write_lock(write_mu_);
  s = CheckUsable();
  if (!s.ok()) return s;

  if (mem_->approx_bytes() >= options_.memtable_bytes) {
    s = SealActiveMemtable(false);
    if (!s.ok()) return s;
    s = CheckUsable();  // an inline drain may have hit a crash point
    if (!s.ok()) return s;
  }

  const uint64_t seq = last_seq_.load(std::memory_order_relaxed) + 1;
  s = wal_->Append(seq, op, key, value);
  if (!s.ok()) return s;
  s = mem_->Insert(key, KvRecord{seq, op, std::string(value)});
  if (!s.ok()) return s;
  last_seq_.store(seq, std::memory_order_release);
  return Status::OK();
}

Status DbImpl::SealActiveMemtable(bool allow_empty) {
  if (mem_->empty() && !allow_empty) return Status::OK();

  // Make the log durable before its contents can reach an L0 run.
  Status s = wal_->SealAndSync();
  if (!s.ok()) return s;
  s = wal_->Close();
  if (!s.ok()) return s;

  const uint64_t new_number = versions_->NewFileNumber();
  std::unique_ptr<WalWriter> new_wal;
  s = WalWriter::Create(root_.get(), new_number, options_.wal_sync_per_write,
                        &new_wal);
  if (!s.ok()) return s;

  const uint64_t sealed_max_seq = last_seq_.load(std::memory_order_relaxed);
  {
    std::unique_lock<std::mutex> lock(state_mu_);
    if (options_.background_worker) {
      imm_cv_.wait(lock, [this] {
        return imm_.size() < options_.immutable_queue_cap || shutting_down_ ||
               crashed_.load(std::memory_order_acquire);
      });
      if (shutting_down_ || crashed_.load(std::memory_order_acquire)) {
        return Status::IOError("store is shutting down");
      }
    }
    mem_->Seal();
    imm_.push_back({mem_, wal_number_, sealed_max_seq});
    mem_ = std::make_shared<Memtable>();
    wal_number_ = new_number;
  }
  wal_ = std::move(new_wal);
  work_cv_.notify_all();

  if (!options_.background_worker) return DrainInline();
  return Status::OK();
}

// Compaction driver.

Status DbImpl::DrainInline() {
  while (true) {
    StepResult result = StepResult::kIdle;
    Status s = WorkerStep(&result);
    if (!s.ok()) return s;
    if (result == StepResult::kIdle) return Status::OK();
  }
}

Status DbImpl::WorkerStep(StepResult* result) {
  *result = StepResult::kIdle;
  std::lock_guard<std::mutex> bg_lock(bg_mu_);
  if (crashed_.load(std::memory_order_acquire)) return Status::OK();

  RetireDueWals();

  ImmEntry entry;
  bool have_imm = false;
  uint64_t log_after = 0;
  {
    std::lock_guard<std::mutex> lock(state_mu_);
    if (!imm_.empty()) {
      entry = imm_.front();
      have_imm = true;
      // Oldest log still needed once this table is flushed: the next
      // sealed table's log, or the active one.
      log_after = imm_.size() >= 2 ? imm_[1].wal_number : wal_number_;
    }
  }
  if (have_imm) {
    Status s = compactor_->MinorCompact(*entry.mem, log_after, entry.max_seq);
    if (s.IsInjectedCrash()) {
      MarkCrashed();
      return s;
    }
    if (!s.ok()) return s;
    {
      std::lock_guard<std::mutex> lock(state_mu_);
      imm_.pop_front();
      retire_.push_back(
          {entry.wal_number,
           std::chrono::steady_clock::now() +
               std::chrono::seconds(options_.wal_grace_seconds)});
    }
    imm_cv_.notify_all();
    *result = StepResult::kMinor;
    return Status::OK();
  }

  VersionSet::Job job;
  if (versions_->PickCompaction(&job)) {
    Status s = compactor_->MajorCompact(job);
    if (s.IsInjectedCrash()) {
      MarkCrashed();
      return s;
    }
    if (!s.ok()) return s;
    *result = StepResult::kMajor;
    return Status::OK();
  }
  return Status::OK();
}

void DbImpl::WorkerLoop() {
  while (true) {
    {
      std::lock_guard<std::mutex> lock(state_mu_);
      if (shutting_down_) return;
    }
    if (crashed_.load(std::memory_order_acquire)) return;

    StepResult result = StepResult::kIdle;
    Status s = WorkerStep(&result);
    if (s.IsInjectedCrash()) return;
    if (!s.ok() || result == StepResult::kIdle) {
      // Idle, or backing off after an error; wake early for new work.
      std::unique_lock<std::mutex> lock(state_mu_);
      work_cv_.wait_for(lock, std::chrono::milliseconds(50), [this] {
        return shutting_down_ || !imm_.empty();
      });
    }
  }
}

void DbImpl::StopWorker() {
  {
    std::lock_guard<std::mutex> lock(state_mu_);
    shutting_down_ = true;
  }
  work_cv_.notify_all();
  imm_cv_.notify_all();
  if (worker_.joinable()) worker_.join();
}

void DbImpl::MarkCrashed() {
  crashed_.store(true, std::memory_order_release);
  if (deleter_) deleter_->crashed.store(true, std::memory_order_release);
  imm_cv_.notify_all();
  work_cv_.notify_all();
}

void DbImpl::RetireDueWals() {
  const auto now = std::chrono::steady_clock::now();
  std::vector<PendingWal> due;
  {
    std::lock_guard<std::mutex> lock(state_mu_);
    while (!retire_.empty() && retire_.front().retain_until <= now) {
      due.push_back(retire_.front());
      retire_.pop_front();
    }
  }
  for (const PendingWal& log : due) {
    Status s;
    MaybeRetireWal(root_.get(), log, now, &s);
  }
}

Status DbImpl::CompactAll() {
  std::lock_guard<std::mutex> write_lock(write_mu_);
  Status s = CheckUsable();
  if (!s.ok()) return s;

  if (!mem_->empty()) {
    s = SealActiveMemtable(false);
    if (!s.ok()) return s;
  }
  s = DrainInline();
  if (!s.ok()) return s;

  // One merge pass per populated level, top down. Each pass pushes the
  // level's runs into the next one, pruning what no snapshot needs. The
  // bottom level merges into itself so released snapshots' variants and
  // orphaned tombstones are reclaimed too.
  for (int level = 0; level <= options_.max_level; level++) {
    std::shared_ptr<const Version> ver = versions_->current();
    if (ver->levels[level].empty()) continue;

    VersionSet::Job job;
    job.level = level;
    job.upper = ver->levels[level];
    if (level < options_.max_level) {
      std::string lo = job.upper.front()->smallest;
      std::string hi = job.upper.front()->largest;
      for (const HandleRef& h : job.upper) {
        if (CompareKeys(h->smallest, lo) < 0) lo = h->smallest;
        if (CompareKeys(h->largest, hi) > 0) hi = h->largest;
      }
      for (const HandleRef& h : ver->levels[level + 1]) {
        if (CompareKeys(h->largest, lo) < 0 ||
            CompareKeys(h->smallest, hi) > 0) {
          continue;
        }
        job.lower.push_back(h);
      }
    }

    {
      std::lock_guard<std::mutex> bg_lock(bg_mu_);
      s = compactor_->MajorCompact(job);
    }
    if (s.IsInjectedCrash()) {
      MarkCrashed();
      return s;
    }
    if (!s.ok()) return s;
  }
  return DrainInline();
}

// Read path.

DbImpl::ReadView DbImpl::AcquireView() const {
  ReadView view;
  std::lock_guard<std::mutex> lock(state_mu_);
  view.mem = mem_;
  view.imms.reserve(imm_.size());
  for (auto it = imm_.rbegin(); it != imm_.rend(); ++it) {
    view.imms.push_back(it->mem);
  }
  view.ver = versions_->current();
  return view;
}

Status DbImpl::OpenReader(int level, uint64_t number,
                          std::shared_ptr<TableReader>* out) {
  if (std::shared_ptr<TableReader> cached = handle_cache_.Get(number)) {
    *out = std::move(cached);
    return Status::OK();
  }
  std::shared_ptr<TableReader> reader;
  if (options_.engine == EngineKind::kDentry) {
    std::shared_ptr<SstDirReader> dir;
    Status s = SstDirReader::Open(root_.get(), level, number,
                                  options_.bloom_bits_per_key,
                                  options_.bloom_num_hashes, &dir);
    if (!s.ok()) return s;
    reader = std::move(dir);
  } else {
    std::shared_ptr<PackedTableReader> packed;
    Status s = PackedTableReader::Open(root_.get(), level, number, &packed);
    if (!s.ok()) return s;
    reader = std::move(packed);
  }
  handle_cache_.Insert(number, reader, 1);
  *out = std::move(reader);
  return Status::OK();
}

Status DbImpl::LookupInRun(const HandleRef& h, std::string_view key,
                           uint64_t snapshot_seq, bool* claimed,
                           KvRecord* rec) {
  *claimed = false;
  ValueCacheKey cache_key{h->number, std::string(key)};
  std::shared_ptr<const std::vector<KvRecord>> records =
      value_cache_.Get(cache_key);
  if (!records) {
    std::shared_ptr<TableReader> reader;
    Status s = OpenReader(h->level, h->number, &reader);
    if (!s.ok()) return s;
    std::vector<KvRecord> loaded;
    bool found = false;
    s = reader->RecordsFor(key, &loaded, &found);
    if (!s.ok()) return s;
    if (!found) return Status::OK();
    size_t charge = cache_key.key.size() + sizeof(ValueCacheKey);
    for (const KvRecord& r : loaded) charge += sizeof(KvRecord) + r.value.size();
    records = std::make_shared<const std::vector<KvRecord>>(std::move(loaded));
    value_cache_.Insert(cache_key, records, charge);
  }
  const KvRecord* visible = VisibleRecord(*records, snapshot_seq);
  if (visible == nullptr) return Status::OK();
  *claimed = true;
  *rec = *visible;
  return Status::OK();
}

Status DbImpl::GetImpl(std::string_view key, uint64_t snapshot_seq,
                       std::string* value) {
  ReadView view = AcquireView();
  KvRecord rec;
  bool claimed = view.mem->Get(key, snapshot_seq, &rec);
  if (!claimed) {
    for (const auto& imm : view.imms) {
      if (imm->Get(key, snapshot_seq, &rec)) {
        claimed = true;
        break;
      }
    }
  }
  if (!claimed) {
    std::vector<HandleRef> candidates;
    for (int level = 0; level <= view.ver->max_level() && !claimed; level++) {
      candidates.clear();
      view.ver->CandidatesForKey(level, key, &candidates);
      for (const HandleRef& h : candidates) {
        Status s = LookupInRun(h, key, snapshot_seq, &claimed, &rec);
        if (!s.ok()) return s;
        if (claimed) break;
      }
    }
  }
  if (!claimed || rec.op == OpCode::kDelete) {
    return Status::NotFound("key not found");
  }
  *value = rec.value;
  return Status::OK();
}

Status DbImpl::Get(std::string_view key, std::string* value) {
  return Get(key, nullptr, value);
}

Status DbImpl::Get(std::string_view key, const Snapshot* snapshot,
                   std::string* value) {
  Status s = CheckUsable();
  if (!s.ok()) return s;
  s = ValidateKey(key);
  if (!s.ok()) return s;
  uint64_t bound = kMaxSequence;
  s = SnapshotBound(snapshot, &bound);
  if (!s.ok()) return s;
  return GetImpl(key, bound, value);
}

Status DbImpl::Scan(std::string_view lo, std::string_view hi,
                    const Snapshot* snapshot,
                    std::vector<std::pair<std::string, std::string>>* out) {
  out->clear();
  Status s = CheckUsable();
  if (!s.ok()) return s;
  uint64_t bound = kMaxSequence;
  s = SnapshotBound(snapshot, &bound);
  if (!s.ok()) return s;

  ReadView view = AcquireView();
  const bool bounded = !hi.empty();

  // Sources are visited from newest to oldest; the first claim on a key
  // wins, so older sources never even read their KV files for it.
  std::map<std::string, KvRecord> merged;
  std::vector<std::pair<std::string, KvRecord>> pairs;
  view.mem->Range(lo, hi, bound, &pairs);
  for (auto& [key, rec] : pairs) merged.try_emplace(std::move(key), rec);
  for (const auto& imm : view.imms) {
    pairs.clear();
    imm->Range(lo, hi, bound, &pairs);
    for (auto& [key, rec] : pairs) merged.try_emplace(std::move(key), rec);
  }

  std::vector<std::vector<HandleRef>> per_level;
  view.ver->CandidatesForRange(lo, hi, &per_level);
  for (const auto& level_handles : per_level) {
    for (const HandleRef& h : level_handles) {
      std::shared_ptr<TableReader> reader;
      s = OpenReader(h->level, h->number, &reader);
      if (!s.ok()) return s;
      std::vector<std::string> keys;
      s = reader->Keys(&keys);
      if (!s.ok()) return s;
      auto begin = std::lower_bound(
          keys.begin(), keys.end(), lo,
          [](const std::string& a, std::string_view b) {
            return CompareKeys(a, b) < 0;
          });
      for (auto it = begin; it != keys.end(); ++it) {
        if (bounded && CompareKeys(*it, hi) >= 0) break;
        if (merged.contains(*it)) continue;
        bool claimed = false;
        KvRecord rec;
        s = LookupInRun(h, *it, bound, &claimed, &rec);
        if (!s.ok()) return s;
        if (claimed) merged.emplace(*it, std::move(rec));
      }
    }
  }

  out->reserve(merged.size());
  for (auto& [key, rec] : merged) {
    if (rec.op == OpCode::kPut) out->emplace_back(key, rec.value);
  }
  return Status::OK();
}

// Snapshots.

Status DbImpl::NewSnapshot(const Snapshot** out) {
  Status s = CheckUsable();
  if (!s.ok()) return s;
  std::lock_guard<std::mutex> lock(snap_mu_);
  const uint64_t seq = last_seq_.load(std::memory_order_acquire);
  snapshots_.push_back(std::make_unique<SnapshotImpl>(seq));
  live_snapshot_seqs_.insert(seq);
  *out = snapshots_.back().get();
  return Status::OK();
}

Status DbImpl::ReleaseSnapshot(const Snapshot* snapshot) {
  if (snapshot == nullptr) {
    return Status::InvalidArgument("null snapshot");
  }
  std::lock_guard<std::mutex> lock(snap_mu_);
  for (auto& owned : snapshots_) {
    if (owned.get() == snapshot) {
      if (owned->released) {
        return Status::InvalidArgument("snapshot already released");
      }
      owned->released = true;
      auto it = live_snapshot_seqs_.find(owned->sequence());
      if (it != live_snapshot_seqs_.end()) live_snapshot_seqs_.erase(it);
      return Status::OK();
    }
  }
  return Status::InvalidArgument("unknown snapshot");
}

Status DbImpl::SnapshotBound(const Snapshot* snapshot, uint64_t* bound) const {
  if (snapshot == nullptr) {
    *bound = kMaxSequence;
    return Status::OK();
  }
  std::lock_guard<std::mutex> lock(snap_mu_);
  for (const auto& owned : snapshots_) {
    if (owned.get() == snapshot) {
      if (owned->released) {
        return Status::InvalidArgument("snapshot already released");
      }
      *bound = owned->sequence();
      return Status::OK();
    }
  }
  return Status::InvalidArgument("unknown snapshot");
}

uint64_t DbImpl::SnapshotFloor() const {
  std::lock_guard<std::mutex> lock(snap_mu_);
  if (live_snapshot_seqs_.empty()) return kMaxSequence;
  return *live_snapshot_seqs_.begin();
}

void DbImpl::OnRunsRetired(const std::vector<HandleRef>& runs) {
  std::unordered_set<uint64_t> numbers;
  for (const HandleRef& h : runs) {
    h->MarkForDeletion();
    numbers.insert(h->number);
    handle_cache_.Erase(h->number);
  }
  value_cache_.EraseIf([&numbers](const ValueCacheKey& key) {
    return numbers.contains(key.number);
  });
}

// Lifecycle.

Status DbImpl::Close() {
  std::lock_guard<std::mutex> write_lock(write_mu_);
  if (closed_.load(std::memory_order_acquire)) return Status::OK();

  // A crashed store is abandoned as-is; a failed open has nothing to flush.
  if (crashed_.load(std::memory_order_acquire) || mem_ == nullptr) {
    StopWorker();
    closed_.store(true, std::memory_order_release);
    return Status::OK();
  }

  Status result;
  if (options_.flush_on_close) {
    if (!mem_->empty()) result = SealActiveMemtable(false);
    while (result.ok()) {
      StepResult step = StepResult::kIdle;
      result = WorkerStep(&step);
      if (result.ok() && step == StepResult::kIdle) break;
    }
  } else if (wal_ && !wal_->sealed()) {
    // Leave the tail recoverable.
    result = wal_->SealAndSync();
  }

  StopWorker();
  if (wal_) {
    Status s = wal_->Close();
    if (result.ok()) result = s;
  }
  if (versions_) versions_->CloseManifest();
  value_cache_.Clear();
  handle_cache_.Clear();
  closed_.store(true, std::memory_order_release);
  return result;
}

void DbImpl::TEST_Crash() {
  MarkCrashed();
  StopWorker();
  closed_.store(true, std::memory_order_release);
}

Status DbImpl::TEST_CompactOnce(StepResult* result) {
  Status s = CheckUsable();
  if (!s.ok()) return s;
  return WorkerStep(result);
}

Status DbImpl::TEST_SealMemtable() {
  std::lock_guard<std::mutex> write_lock(write_mu_);
  Status s = CheckUsable();
  if (!s.ok()) return s;
  return SealActiveMemtable(true);
}

// Introspection.

IoCounters DbImpl::CountersSnapshot() const { return root_->CountersSnapshot(); }

void DbImpl::ResetCounters() { root_->ResetCounters(); }

CompactionStats DbImpl::compaction_stats() const { return compactor_->stats(); }

VersionState DbImpl::TEST_VersionState() const {
  VersionState state;
  std::shared_ptr<const Version> ver = versions_->current();
  for (int level = 0; level <= ver->max_level(); level++) {
    for (const HandleRef& h : ver->levels[level]) {
      state.files.push_back(
          {h->level, h->number, h->smallest, h->largest, h->entry_count});
    }
  }
  state.last_seq = versions_->last_seq();
  state.next_file_number = versions_->next_file_number();
  state.log_number = versions_->log_number();
  return state;
}

// Store removal.

Status DestroyDB(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return Status::OK();

  std::unique_ptr<StoreRoot> root;
  Status s = StoreRoot::Open(path, false, nullptr, &root);
  if (!s.ok()) return s;

  std::vector<std::string> entries;
  s = root->ListDir("", &entries);
  if (!s.ok()) return s;
  for (const std::string& name : entries) {
    uint64_t number = 0;
    int level = 0;
    if (name == "CURRENT" || name == "CURRENT.tmp" ||
        ParseLogFileName(name, &number) ||
        ParseManifestFileName(name, &number)) {
      root->RemoveFile(name);
    } else if (ParseLevelDirName(name, &level)) {
      std::vector<std::string> runs;
      if (!root->ListDir(name, &runs).ok()) continue;
      for (const std::string& run : runs) {
        if (ParseSstDirEntry(run, &number)) {
          RemoveSstDir(root.get(), level, number);
        } else if (ParsePackedFileEntry(run, &number)) {
          root->RemoveFile(name + "/" + run);
        }
      }
      root->RemoveDir(name);
    }
  }
  // The root itself goes only if nothing foreign is left.
  std::filesystem::remove(path, ec);
  return Status::OK();
}

}  // namespace dentrykv
