// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// End-to-end acceptance gate. Seven checks, one verdict line each; any
// FAIL verdict also fails the doctest run.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bench/workload.h"
#include "core/filenames.h"
#include "core/record.h"
#include "dentrykv/db.h"
#include "dentrykv/options.h"
#include "dentrykv/status.h"
#include "io/store_root.h"
#include "sst/bloom.h"
#include "sst/sstdir.h"
#include "test_util.h"
#include "version/version_edit.h"

namespace dentrykv {
namespace {

using test::MapOracle;
using test::TempDir;

void Verdict(int n, const char* name, bool pass, const std::string& detail) {
  std::printf("acceptance %d/7 %-22s %s%s%s\n", n, name, pass ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

std::unique_ptr<DB> MustOpen(const Options& options, const std::string& path) {
  std::unique_ptr<DB> db;
  Status s = DB::Open(options, path, &db);
  REQUIRE_MESSAGE(s.ok(), s.ToString());
  return db;
}

std::vector<std::pair<std::string, std::string>> FullScan(DB* db) {
  std::vector<std::pair<std::string, std::string>> out;
  REQUIRE(db->Scan("", "", nullptr, &out).ok());
  return out;
}

std::vector<std::pair<std::string, std::string>> Entries(
    const MapOracle& oracle) {
  return {oracle.map().begin(), oracle.map().end()};
}

// Reads every live run through a second store handle: per-key record
// counts, total entries, and the largest sequence on disk.
struct DiskSurvey {
  bool ok = true;
  std::map<std::string, uint64_t> variants;
  uint64_t entries = 0;
  uint64_t max_seq = 0;
};

DiskSurvey SurveyRuns(const std::string& path, const VersionState& state,
                      const Options& options) {
  DiskSurvey survey;
  std::unique_ptr<StoreRoot> root;
  if (!StoreRoot::Open(path, false, nullptr, &root).ok()) {
    survey.ok = false;
    return survey;
  }
  for (const LevelFileInfo& f : state.files) {
    std::shared_ptr<SstDirReader> reader;
    Status s = SstDirReader::Open(root.get(), f.level, f.number,
                                  options.bloom_bits_per_key,
                                  options.bloom_num_hashes, &reader);
    if (!s.ok()) {
      survey.ok = false;
      return survey;
    }
    survey.entries += reader->entry_count();
    std::vector<std::string> keys;
    if (!reader->Keys(&keys).ok()) {
      survey.ok = false;
      return survey;
    }
    for (const std::string& key : keys) {
      std::vector<KvRecord> recs;
      bool found = false;
      if (!reader->RecordsFor(key, &recs, &found).ok() || !found) {
        survey.ok = false;
        return survey;
      }
      survey.variants[key] += recs.size();
      for (const KvRecord& rec : recs)
        survey.max_seq = std::max(survey.max_seq, rec.seq);
    }
  }
  return survey;
}

// Every run on disk belongs to the live version and vice versa, with one
// manifest and a CURRENT left in the root.
bool CatalogMatchesDisk(const std::string& path, const VersionState& state,
                        const Options& options, std::string* why) {
  std::unique_ptr<StoreRoot> root;
  Status s = StoreRoot::Open(path, false, nullptr, &root);
  if (!s.ok()) {
    *why = s.ToString();
    return false;
  }
  std::set<std::pair<int, uint64_t>> live;
  for (const LevelFileInfo& f : state.files) live.insert({f.level, f.number});
  size_t seen = 0;
  for (int level = 0; level <= options.max_level; ++level) {
    std::vector<std::string> names;
    s = root->ListDir(LevelDirName(level), &names);
    if (!s.ok()) {
      *why = s.ToString();
      return false;
    }
    for (const std::string& name : names) {
      uint64_t number = 0;
      bool parsed = options.engine == EngineKind::kDentry
                        ? ParseSstDirEntry(name, &number)
                        : ParsePackedFileEntry(name, &number);
      if (!parsed || live.count({level, number}) == 0) {
        *why = "orphan " + LevelDirName(level) + "/" + name;
        return false;
      }
      ++seen;
    }
  }
  if (seen != live.size()) {
    *why = "committed run missing on disk";
    return false;
  }
  std::vector<std::string> names;
  if (!root->ListDir("", &names).ok()) {
    *why = "cannot list store root";
    return false;
  }
  int manifests = 0;
  bool current = false;
  uint64_t ignored = 0;
  for (const std::string& name : names) {
    if (ParseManifestFileName(name, &ignored)) ++manifests;
    if (name == CurrentFileName()) current = true;
  }
  if (manifests != 1 || !current) {
    *why = "expected one manifest plus CURRENT";
    return false;
  }
  return true;
}

// 1. At desk scale the dentry engine's write amplification must stay well
// under the packed baseline's, and its first fill under 4x.
TEST_CASE("acceptance: write amplification trend at desk scale") {
  TempDir dir("acc-amp");
  std::filesystem::create_directories(dir.path());
  WorkloadSpec spec;
  spec.benchmark = "wdw";
  spec.num = 100000;
  spec.key_size = 16;
  spec.value_size = 512;
  spec.delete_pct = 50;
  spec.seed = 1;
  spec.l0_limit = 500;
  spec.sync = false;

  spec.engine = EngineKind::kDentry;
  spec.db_path = dir.path() + "/dentry";
  BenchReport dentry;
  REQUIRE(run_workload(spec, &dentry).ok());

  spec.engine = EngineKind::kPacked;
  spec.db_path = dir.path() + "/packed";
  BenchReport packed;
  REQUIRE(run_workload(spec, &packed).ok());

  double dentry_amp = dentry.overall_write_amp();
  double packed_amp = packed.overall_write_amp();
  REQUIRE(!dentry.phases.empty());
  REQUIRE(dentry.phases[0].name == "fill");
  double fill_amp = dentry.phases[0].write_amp();

  bool pass = dentry_amp <= 0.5 * packed_amp && fill_amp <= 4.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "dentry %.3f (fill %.3f) vs packed %.3f", dentry_amp, fill_amp,
                packed_amp);
  Verdict(1, "write-amp trend", pass, detail);
  CHECK(dentry_amp <= 0.5 * packed_amp);
  CHECK(fill_amp <= 4.0);
}

// 2. With unique keys and no snapshots, major compaction moves every record
// by hard link: zero payload bytes rewritten across at least five majors.
TEST_CASE("acceptance: major compaction links unique keys instead of copying") {
  TempDir dir("acc-link");
  Options options = test::SmallStoreOptions(EngineKind::kDentry);
  auto db = MustOpen(options, dir.path());
  char key[16];
  for (int i = 0; i < 3000; ++i) {
    std::snprintf(key, sizeof(key), "u%05d", i);
    REQUIRE(db->Put(key, std::string(48, static_cast<char>('a' + i % 26))).ok());
  }
  REQUIRE(db->CompactAll().ok());
  CompactionStats stats = db->compaction_stats();
  IoCounters counters = db->CountersSnapshot();
  REQUIRE(db->Close().ok());

  bool pass = stats.major_compactions >= 5 && stats.major_payload_bytes == 0 &&
              stats.major_files_linked > 0 &&
              stats.major_files_rewritten == 0 && counters.links_created > 0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%llu majors, %llu links, %llu rewrites, %llu payload bytes",
                static_cast<unsigned long long>(stats.major_compactions),
                static_cast<unsigned long long>(stats.major_files_linked),
                static_cast<unsigned long long>(stats.major_files_rewritten),
                static_cast<unsigned long long>(stats.major_payload_bytes));
  Verdict(2, "link-not-copy", pass, detail);
  CHECK(stats.major_compactions >= 5);
  CHECK(stats.major_payload_bytes == 0);
  CHECK(stats.major_files_linked > 0);
  CHECK(stats.major_files_rewritten == 0);
  CHECK(counters.links_created > 0);
}

// 3. Ten randomized scripts of mixed puts, deletes, gets, and scans agree
// with the in-memory model on every read, and the two engines agree with
// each other byte for byte.
TEST_CASE("acceptance: randomized scripts match the reference model") {
  struct Op {
    int kind;  // 0 put, 1 delete, 2 get, 3 scan
    std::string key, value, lo, hi;
  };
  TempDir dir("acc-oracle");
  std::filesystem::create_directories(dir.path());
  Options base;
  base.memtable_bytes = 128 << 10;
  base.l0_limit_files = 512;
  base.sstdir_file_target = 256;
  base.max_level = 4;
  base.sync_enabled = false;
  base.background_worker = false;

  uint64_t bad = 0;
  for (int script = 0; script < 10; ++script) {
    std::mt19937_64 rng(1000 + script);
    auto pool_key = [&rng] {
      char b[8];
      std::snprintf(b, sizeof(b), "k%03d", static_cast<int>(rng() % 700));
      return std::string(b);
    };
    std::vector<Op> ops;
    ops.reserve(10000);
    for (int i = 0; i < 10000; ++i) {
      Op op;
      uint64_t roll = rng() % 100;
      if (roll < 45) {
        op.kind = 0;
        op.key = pool_key();
        op.value.resize(16 + rng() % 1009);  // 16..1024 bytes
        for (char& c : op.value) c = static_cast<char>(rng());
      } else if (roll < 65) {
        op.kind = 1;
        op.key = pool_key();
      } else if (roll < 90) {
        op.kind = 2;
        op.key = pool_key();
      } else {
        op.kind = 3;
        if (rng() % 10 >= 3) {
          op.lo = pool_key();
          op.hi = pool_key();
          if (op.hi < op.lo) std::swap(op.lo, op.hi);
        }
      }
      ops.push_back(std::move(op));
    }

    std::vector<std::pair<std::string, std::string>> finals[2];
    for (int e = 0; e < 2; ++e) {
      Options options = base;
      options.engine = e == 0 ? EngineKind::kDentry : EngineKind::kPacked;
      auto db = MustOpen(options, dir.path() + "/s" + std::to_string(script) +
                                      (e == 0 ? "d" : "p"));
      MapOracle oracle;
      std::string value;
      std::vector<std::pair<std::string, std::string>> scan;
      for (const Op& op : ops) {
        switch (op.kind) {
          case 0:
            REQUIRE(db->Put(op.key, op.value).ok());
            oracle.Put(op.key, op.value);
            break;
          case 1:
            REQUIRE(db->Delete(op.key).ok());
            oracle.Delete(op.key);
            break;
          case 2: {
            Status s = db->Get(op.key, &value);
            std::string want;
            bool found = oracle.Get(op.key, &want);
            if (found != s.ok() || (found && value != want) ||
                (!found && !s.IsNotFound())) {
              ++bad;
            }
            break;
          }
          case 3:
            REQUIRE(db->Scan(op.lo, op.hi, nullptr, &scan).ok());
            if (scan != oracle.Scan(op.lo, op.hi)) ++bad;
            break;
        }
      }
      finals[e] = FullScan(db.get());
      if (finals[e] != oracle.Scan("", "")) ++bad;
      REQUIRE(db->Close().ok());
    }
    if (finals[0] != finals[1]) ++bad;
  }

  bool pass = bad == 0;
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "10 scripts x 10000 ops x 2 engines, %llu mismatches",
                static_cast<unsigned long long>(bad));
  Verdict(3, "oracle equivalence", pass, detail);
  CHECK(bad == 0);
}

// 4. A crash injected at every compaction stage boundary, plus process
// kills after synced WAL writes, always recovers to the acknowledged
// state with no orphan runs left behind.
TEST_CASE("acceptance: injected crashes recover to a consistent store") {
  const char* kPoints[] = {
      "minor.begin",        "minor.dir_written",
      "minor.committed",    "major.begin",
      "major.inputs_scanned", "major.one_output_written",
      "major.outputs_done", "major.committed",
      "major.inputs_removed"};
  const int kPointCount = static_cast<int>(std::size(kPoints));

  int points_passed = 0;
  for (const char* point : kPoints) {
    TempDir dir("acc-crash");
    auto hooks = std::make_shared<TestHooks>();
    std::string armed;
    bool fired = false;
    hooks->crash_point = [&armed, &fired](std::string_view p) {
      if (!armed.empty() && p == armed) {
        fired = true;
        return true;
      }
      return false;
    };
    Options options;
    options.engine = EngineKind::kDentry;
    options.memtable_bytes = 1 << 20;
    options.l0_limit_files = 8;
    options.sstdir_file_target = 4;
    options.max_level = 3;
    options.sync_enabled = false;
    options.background_worker = false;
    options.hooks = hooks;
    auto db = MustOpen(options, dir.path());

    MapOracle oracle;
    char key[16];
    for (int i = 0; i < 40; ++i) {
      std::snprintf(key, sizeof(key), "base%03d", i);
      std::string value(64, static_cast<char>('a' + i % 26));
      REQUIRE(db->Put(key, value).ok());
      oracle.Put(key, value);
    }
    REQUIRE(db->TEST_SealMemtable().ok());  // settles into levels, disarmed

    for (int i = 0; i < 20; ++i) {
      std::snprintf(key, sizeof(key), "new%03d", i);
      std::string value(64, static_cast<char>('A' + i % 26));
      REQUIRE(db->Put(key, value).ok());
      oracle.Put(key, value);
    }
    for (int i = 0; i < 10; ++i) {
      std::snprintf(key, sizeof(key), "base%03d", i);
      REQUIRE(db->Delete(key).ok());
      oracle.Delete(key);
    }

    armed = point;
    Status s = db->TEST_SealMemtable();
    for (int i = 0; i < 20 && !fired && s.ok(); ++i) {
      DB::StepResult result = DB::StepResult::kIdle;
      s = db->TEST_CompactOnce(&result);
      if (result == DB::StepResult::kIdle) break;
    }
    db->TEST_Crash();
    db.reset();

    bool sub = fired;
    Options reopen = options;
    reopen.hooks = nullptr;
    std::unique_ptr<DB> rdb;
    Status rs = DB::Open(reopen, dir.path(), &rdb);
    sub = sub && rs.ok();
    if (rs.ok()) {
      sub = sub && FullScan(rdb.get()) == Entries(oracle);
      std::string why;
      bool tidy = CatalogMatchesDisk(dir.path(), rdb->TEST_VersionState(),
                                     reopen, &why);
      CHECK_MESSAGE(tidy, "crash point ", point, ": ", why);
      sub = sub && tidy;
      REQUIRE(rdb->Close().ok());
    }
    CHECK_MESSAGE(sub, "crash point ", point);
    if (sub) ++points_passed;
  }

  int kills_passed = 0;
  for (EngineKind kind : {EngineKind::kDentry, EngineKind::kPacked}) {
    TempDir dir("acc-kill");
    Options options;
    options.engine = kind;
    options.sync_enabled = true;
    options.wal_sync_per_write = true;
    options.background_worker = false;
    auto db = MustOpen(options, dir.path());
    MapOracle oracle;
    char key[16];
    for (int i = 0; i < 300; ++i) {
      std::snprintf(key, sizeof(key), "w%03d", i);
      std::string value(32, static_cast<char>('a' + i % 26));
      REQUIRE(db->Put(key, value).ok());
      oracle.Put(key, value);
    }
    bool sub = db->CountersSnapshot().syncs >= 300;
    db->TEST_Crash();
    db.reset();

    std::unique_ptr<DB> rdb;
    Status rs = DB::Open(options, dir.path(), &rdb);
    sub = sub && rs.ok();
    if (rs.ok()) {
      sub = sub && FullScan(rdb.get()) == Entries(oracle);
      std::string why;
      sub = sub && CatalogMatchesDisk(dir.path(), rdb->TEST_VersionState(),
                                      options, &why);
      REQUIRE(rdb->Close().ok());
    }
    CHECK_MESSAGE(sub, "kill after synced WAL, engine ",
                  kind == EngineKind::kDentry ? "dentry" : "packed");
    if (sub) ++kills_passed;
  }

  bool pass = points_passed == kPointCount && kills_passed == 2;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d/%d crash points, %d/2 WAL kills",
                points_passed, kPointCount, kills_passed);
  Verdict(4, "crash atomicity", pass, detail);
  CHECK(points_passed == kPointCount);
  CHECK(kills_passed == 2);
}

// 5. At ten bits per key the bloom filter's false-positive rate sits near
// the design point and it never reports a member absent.
TEST_CASE("acceptance: bloom filter accuracy at ten bits per key") {
  const int n = 10000;
  BloomFilter filter(n, 10, 7);
  std::vector<std::string> keys;
  keys.reserve(n);
  char buf[24];
  for (int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "member%06d", i);
    keys.emplace_back(buf);
    filter.Add(keys.back());
  }
  uint64_t false_positives = 0;
  for (int i = 0; i < 100000; ++i) {
    std::snprintf(buf, sizeof(buf), "absent%06d", i);
    if (filter.MayContain(buf)) ++false_positives;
  }
  double rate = static_cast<double>(false_positives) / 100000.0;
  uint64_t false_negatives = 0;
  for (uint64_t i = 0; i < 1000000; ++i) {
    if (!filter.MayContain(keys[i % n])) ++false_negatives;
  }

  bool pass =
      rate >= 0.004 && rate <= 0.016 && false_negatives == 0;
  char detail[96];
  std::snprintf(detail, sizeof(detail),
                "fp rate %.4f, %llu false negatives in 1000000 probes", rate,
                static_cast<unsigned long long>(false_negatives));
  Verdict(5, "bloom accuracy", pass, detail);
  CHECK(rate >= 0.004);
  CHECK(rate <= 0.016);
  CHECK(false_negatives == 0);
}

// 6. A live snapshot pins pre-overwrite variants through compaction; once
// every snapshot is released, one more compaction collapses every key back
// to a single record.
TEST_CASE("acceptance: snapshots pin record variants until released") {
  TempDir dir("acc-snap");
  Options options;
  options.engine = EngineKind::kDentry;
  options.memtable_bytes = 64 << 10;
  options.l0_limit_files = 128;
  options.sstdir_file_target = 64;
  options.max_level = 4;
  options.sync_enabled = false;
  options.background_worker = false;
  auto db = MustOpen(options, dir.path());

  const int n = 1000;
  char key[16];
  std::map<std::string, std::string> before;
  for (int i = 0; i < n; ++i) {
    std::snprintf(key, sizeof(key), "k%04d", i);
    std::string value = "old" + std::to_string(i) + std::string(48, 'x');
    REQUIRE(db->Put(key, value).ok());
    before[key] = value;
  }
  REQUIRE(db->CompactAll().ok());

  const Snapshot* snap = nullptr;
  REQUIRE(db->NewSnapshot(&snap).ok());

  std::map<std::string, std::string> after_map;
  for (int i = 0; i < n; ++i) {
    std::snprintf(key, sizeof(key), "k%04d", i);
    if (i % 2 == 0) {
      std::string value = "new" + std::to_string(i) + std::string(48, 'y');
      REQUIRE(db->Put(key, value).ok());
      after_map[key] = value;
    } else {
      REQUIRE(db->Delete(key).ok());
    }
  }
  REQUIRE(db->CompactAll().ok());

  uint64_t bad = 0;
  std::string value;
  for (const auto& [k, want] : before) {
    Status s = db->Get(k, snap, &value);
    if (!s.ok() || value != want) ++bad;
  }
  for (int i = 0; i < n; ++i) {
    std::snprintf(key, sizeof(key), "k%04d", i);
    Status s = db->Get(key, &value);
    if (i % 2 == 0) {
      if (!s.ok() || value != after_map[key]) ++bad;
    } else if (!s.IsNotFound()) {
      ++bad;
    }
  }

  DiskSurvey pinned = SurveyRuns(dir.path(), db->TEST_VersionState(), options);
  uint64_t max_variants = 0;
  for (const auto& [k, count] : pinned.variants)
    max_variants = std::max(max_variants, count);
  bool retained = pinned.ok && max_variants >= 2;

  REQUIRE(db->ReleaseSnapshot(snap).ok());
  REQUIRE(db->CompactAll().ok());
  DiskSurvey collapsed =
      SurveyRuns(dir.path(), db->TEST_VersionState(), options);
  bool single = collapsed.ok && collapsed.variants.size() == n / 2 &&
                collapsed.entries == n / 2;
  for (const auto& [k, count] : collapsed.variants) {
    if (count != 1) single = false;
  }
  REQUIRE(db->Close().ok());

  bool pass = bad == 0 && retained && single;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "%llu bad reads, max variants pinned %llu, %zu keys at 1 after",
                static_cast<unsigned long long>(bad),
                static_cast<unsigned long long>(max_variants),
                collapsed.variants.size());
  Verdict(6, "snapshot retention", pass, detail);
  CHECK(bad == 0);
  CHECK(retained);
  CHECK(single);
}

// 7. After a mixed workload with periodic reopens and one kill: levels past
// L0 stay pairwise disjoint, the committed sequence dominates every record
// on disk, and recovery replays to the same version every time.
TEST_CASE("acceptance: recovery preserves catalog invariants") {
  TempDir dir("acc-recover");
  Options options;
  options.engine = EngineKind::kDentry;
  options.memtable_bytes = 32 << 10;
  options.l0_limit_files = 128;
  options.sstdir_file_target = 64;
  options.max_level = 4;
  options.sync_enabled = false;
  options.background_worker = false;
  auto db = MustOpen(options, dir.path());

  MapOracle oracle;
  std::mt19937_64 rng(77);
  uint64_t bad = 0;
  std::string value;
  char key[16];
  for (int i = 0; i < 10000; ++i) {
    if (i > 0 && i % 2500 == 0) {
      REQUIRE(db->Close().ok());
      db = MustOpen(options, dir.path());
    }
    if (i == 7100) {
      db->TEST_Crash();
      db.reset();
      db = MustOpen(options, dir.path());
    }
    std::snprintf(key, sizeof(key), "r%03d", static_cast<int>(rng() % 600));
    uint64_t roll = rng() % 100;
    if (roll < 60) {
      std::string v = test::RandomValue(rng, 256);
      REQUIRE(db->Put(key, v).ok());
      oracle.Put(key, v);
    } else if (roll < 85) {
      REQUIRE(db->Delete(key).ok());
      oracle.Delete(key);
    } else {
      Status s = db->Get(key, &value);
      std::string want;
      bool found = oracle.Get(key, &want);
      if (found != s.ok() || (found && value != want)) ++bad;
    }
  }
  REQUIRE(db->Close().ok());

  db = MustOpen(options, dir.path());
  VersionState s1 = db->TEST_VersionState();
  bool scan_ok = FullScan(db.get()) == Entries(oracle);
  REQUIRE(db->Close().ok());
  db = MustOpen(options, dir.path());
  VersionState s2 = db->TEST_VersionState();
  REQUIRE(db->Close().ok());

  bool replay_same =
      s1.last_seq == s2.last_seq && s1.files.size() == s2.files.size();
  if (replay_same) {
    for (size_t i = 0; i < s1.files.size(); ++i) {
      const LevelFileInfo& a = s1.files[i];
      const LevelFileInfo& b = s2.files[i];
      if (a.level != b.level || a.number != b.number ||
          a.smallest != b.smallest || a.largest != b.largest ||
          a.entry_count != b.entry_count) {
        replay_same = false;
        break;
      }
    }
  }

  // The manifest parses to the same edits every time.
  bool manifest_ok = false;
  {
    std::unique_ptr<StoreRoot> root;
    REQUIRE(StoreRoot::Open(dir.path(), false, nullptr, &root).ok());
    std::string current;
    REQUIRE(root->ReadFile(CurrentFileName(), &current).ok());
    REQUIRE(!current.empty());
    REQUIRE(current.back() == '\n');
    current.pop_back();
    std::string data;
    REQUIRE(root->ReadFile(current, &data).ok());
    std::vector<VersionEdit> e1, e2;
    bool clean1 = false, clean2 = false;
    ParseManifestEdits(data, &e1, &clean1);
    ParseManifestEdits(data, &e2, &clean2);
    std::string enc1, enc2;
    for (const VersionEdit& e : e1) e.EncodePayload(&enc1);
    for (const VersionEdit& e : e2) e.EncodePayload(&enc2);
    manifest_ok = clean1 && clean2 && e1.size() == e2.size() && enc1 == enc2;
  }

  bool disjoint = true;
  for (int level = 1; level <= options.max_level; ++level) {
    std::vector<LevelFileInfo> runs;
    for (const LevelFileInfo& f : s2.files)
      if (f.level == level) runs.push_back(f);
    std::sort(runs.begin(), runs.end(),
              [](const LevelFileInfo& a, const LevelFileInfo& b) {
                return a.smallest < b.smallest;
              });
    for (size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].smallest > runs[i].largest) disjoint = false;
      if (i > 0 && runs[i - 1].largest >= runs[i].smallest) disjoint = false;
    }
  }

  DiskSurvey survey = SurveyRuns(dir.path(), s2, options);
  bool seq_ok = survey.ok && survey.max_seq <= s2.last_seq;

  bool pass =
      bad == 0 && scan_ok && replay_same && manifest_ok && disjoint && seq_ok;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%llu bad reads; disjoint %s; max disk seq %llu <= last_seq "
                "%llu; replay %s",
                static_cast<unsigned long long>(bad), disjoint ? "yes" : "no",
                static_cast<unsigned long long>(survey.max_seq),
                static_cast<unsigned long long>(s2.last_seq),
                replay_same ? "stable" : "diverged");
  Verdict(7, "recovery invariants", pass, detail);
  CHECK(bad == 0);
  CHECK(scan_ok);
  CHECK(replay_same);
  CHECK(manifest_ok);
  CHECK(disjoint);
  CHECK(seq_ok);
}

}  // namespace
}  // namespace dentrykv
