// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "bench/workload.h"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <numeric>
#include <random>

#include "dentrykv/db.h"

namespace dentrykv {

namespace {

// Phase salts keep the seeded orders of different phases independent.
constexpr uint64_t kFillSalt = 0x66696c6c;
constexpr uint64_t kDeleteSalt = 0x64656c;
constexpr uint64_t kReadSalt = 0x72656164;
constexpr uint64_t kValueSalt = 0x76616c;

std::mt19937_64 SeededRng(uint64_t seed, uint64_t salt) {
  return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + salt);
}

// Timer plus payload accounting for one phase.
class PhaseScope {
 public:
  PhaseScope(DB* db, std::string name, BenchReport* report)
      : db_(db), report_(report) {
    phase_.name = std::move(name);
    db_->ResetCounters();
    start_ = std::chrono::steady_clock::now();
  }

  void CountPut(std::string_view key, std::string_view value) {
    phase_.ops++;
    phase_.user_payload_bytes += key.size() + value.size();
  }
  void CountDelete(std::string_view key) {
    phase_.ops++;
    phase_.user_payload_bytes += key.size();
  }
  void CountRead(uint64_t n = 1) { phase_.ops += n; }

  void Finish() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    double micros =
        std::chrono::duration_cast<std::chrono::duration<double, std::micro>>(
            elapsed)
            .count();
    phase_.micros_per_op = phase_.ops == 0 ? 0.0 : micros / phase_.ops;
    phase_.counters = db_->CountersSnapshot();
    report_->phases.push_back(phase_);
  }

 private:
  DB* db_;
  BenchReport* report_;
  PhaseReport phase_;
  std::chrono::steady_clock::time_point start_;
};

Status FillPhase(DB* db, const WorkloadSpec& spec, const std::string& name,
                 uint64_t first_index, bool shuffled, BenchReport* report) {
  std::vector<uint64_t> order(spec.num);
  std::iota(order.begin(), order.end(), first_index);
  if (shuffled) {
    auto rng = SeededRng(spec.seed, kFillSalt + first_index);
    std::shuffle(order.begin(), order.end(), rng);
  }
  PhaseScope phase(db, name, report);
  for (uint64_t index : order) {
    std::string key = BenchKey(spec, index);
    std::string value = BenchValue(spec, index);
    Status s = db->Put(key, value);
    if (!s.ok()) return s;
    phase.CountPut(key, value);
  }
  phase.Finish();
  return Status::OK();
}

// Seeded uniform choice of delete_pct percent of [0, num).
std::vector<uint64_t> DeleteSet(const WorkloadSpec& spec) {
  std::vector<uint64_t> order(spec.num);
  std::iota(order.begin(), order.end(), 0);
  auto rng = SeededRng(spec.seed, kDeleteSalt);
  std::shuffle(order.begin(), order.end(), rng);
  size_t count = static_cast<size_t>(spec.num * spec.delete_pct / 100);
  order.resize(count);
  return order;
}

Status DeletePhase(DB* db, const WorkloadSpec& spec,
                   const std::vector<uint64_t>& victims,
                   BenchReport* report) {
  PhaseScope phase(db, "delete", report);
  for (uint64_t index : victims) {
    std::string key = BenchKey(spec, index);
    Status s = db->Delete(key);
    if (!s.ok()) return s;
    phase.CountDelete(key);
  }
  phase.Finish();
  return Status::OK();
}

}  // namespace

Status WorkloadSpec::Validate() const {
  static const char* kNames[] = {"fillseq",    "fillrandom", "readseq",
                                 "readrandom", "wdw",        "wdr"};
  bool known = false;
  for (const char* name : kNames) known |= benchmark == name;
  if (!known) return Status::InvalidArgument("unknown benchmark " + benchmark);
  if (key_size < 8) return Status::InvalidArgument("key_size must be >= 8");
  if (num == 0) return Status::InvalidArgument("num must be positive");
  if (delete_pct < 0 || delete_pct > 100) {
    return Status::InvalidArgument("delete_pct must be in [0, 100]");
  }
  if (db_path.empty()) return Status::InvalidArgument("db path required");
  return Status::OK();
}

std::string BenchKey(const WorkloadSpec& spec, uint64_t index) {
  char buf[64];
  int width = static_cast<int>(std::min<size_t>(spec.key_size, 32));
  std::snprintf(buf, sizeof(buf), "%0*" PRIu64, width, index);
  std::string key(buf);
  // Counter wider than key_size keeps its digits (keys stay unique).
  if (key.size() < spec.key_size) {
    key.insert(0, spec.key_size - key.size(), '0');
  }
  return key;
}

std::string BenchValue(const WorkloadSpec& spec, uint64_t index) {
  auto rng = SeededRng(spec.seed, kValueSalt + index);
  std::string value(spec.value_size, '\0');
  size_t i = 0;
  while (i < value.size()) {
    uint64_t word = rng();
    for (int b = 0; b < 8 && i < value.size(); b++, i++) {
      value[i] = static_cast<char>(word >> (8 * b));
    }
  }
  return value;
}

uint64_t BenchReport::total_payload() const {
  uint64_t total = 0;
  for (const auto& p : phases) total += p.user_payload_bytes;
  return total;
}

uint64_t BenchReport::total_written() const {
  uint64_t total = 0;
  for (const auto& p : phases) total += p.counters.data_bytes_written;
  return total;
}

double BenchReport::overall_write_amp() const {
  uint64_t payload = total_payload();
  if (payload == 0) return 0.0;
  return static_cast<double>(total_written()) / static_cast<double>(payload);
}

Status run_workload(const WorkloadSpec& spec, BenchReport* report) {
  Status s = spec.Validate();
  if (!s.ok()) return s;
  report->benchmark = spec.benchmark;
  report->engine = spec.engine == EngineKind::kDentry ? "dentry" : "packed";
  report->phases.clear();

  s = DestroyDB(spec.db_path);
  if (!s.ok()) return s;

  Options options;
  options.engine = spec.engine;
  options.l0_limit_files = spec.l0_limit;
  options.sstdir_file_target = std::min<uint64_t>(
      options.sstdir_file_target, std::max<uint64_t>(spec.l0_limit, 1));
  options.sync_enabled = spec.sync;
  options.value_cache_bytes = spec.value_cache_bytes;
  options.handle_cache_entries = spec.handle_cache_entries;
  // Inline compaction keeps the run reproducible operation for operation.
  options.background_worker = false;

  std::unique_ptr<DB> db;
  s = DB::Open(options, spec.db_path, &db);
  if (!s.ok()) return s;

  const bool random_fill = spec.benchmark != "fillseq" &&
                           spec.benchmark != "readseq";
  s = FillPhase(db.get(), spec, "fill", 0, random_fill, report);

  if (s.ok() && spec.benchmark == "readseq") {
    PhaseScope phase(db.get(), "readseq", report);
    std::vector<std::pair<std::string, std::string>> rows;
    s = db->Scan("", "", nullptr, &rows);
    if (s.ok() && rows.size() != spec.num) {
      s = Status::Corruption("readseq scan returned " +
                             std::to_string(rows.size()) + " of " +
                             std::to_string(spec.num) + " keys");
    }
    phase.CountRead(spec.num);
    phase.Finish();
  }

  if (s.ok() && spec.benchmark == "readrandom") {
    std::vector<uint64_t> order(spec.num);
    std::iota(order.begin(), order.end(), 0);
    auto rng = SeededRng(spec.seed, kReadSalt);
    std::shuffle(order.begin(), order.end(), rng);
    PhaseScope phase(db.get(), "readrandom", report);
    std::string value;
    for (uint64_t index : order) {
      s = db->Get(BenchKey(spec, index), &value);
      if (!s.ok()) break;
      phase.CountRead();
    }
    phase.Finish();
  }

  if (s.ok() && (spec.benchmark == "wdw" || spec.benchmark == "wdr")) {
    std::vector<uint64_t> victims = DeleteSet(spec);
    s = DeletePhase(db.get(), spec, victims, report);

    if (s.ok() && spec.benchmark == "wdw") {
      s = FillPhase(db.get(), spec, "fill2", spec.num, true, report);
    }
    if (s.ok() && spec.benchmark == "wdr") {
      std::vector<bool> deleted(spec.num, false);
      for (uint64_t index : victims) deleted[index] = true;
      PhaseScope phase(db.get(), "read", report);
      std::string value;
      for (uint64_t index = 0; index < spec.num && s.ok(); index++) {
        Status get = db->Get(BenchKey(spec, index), &value);
        if (deleted[index]) {
          if (!get.IsNotFound()) {
            s = Status::Corruption("deleted key still readable: " +
                                   BenchKey(spec, index));
          }
        } else if (!get.ok()) {
          s = get;
        } else if (value != BenchValue(spec, index)) {
          s = Status::Corruption("wrong value for " + BenchKey(spec, index));
        }
        phase.CountRead();
      }
      phase.Finish();
    }
  }

  Status close = db->Close();
  if (s.ok()) s = close;
  return s;
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void CsvRow(std::string* out, const BenchReport& report,
            const std::string& phase_name, uint64_t ops, double micros_per_op,
            uint64_t payload, const IoCounters& c, double write_amp) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%s,%s,%s,%" PRIu64 ",%s,%" PRIu64 ",%" PRIu64
                ",%s,%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64
                ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n",
                report.benchmark.c_str(), report.engine.c_str(),
                phase_name.c_str(), ops, FormatDouble(micros_per_op).c_str(),
                payload, c.data_bytes_written,
                FormatDouble(write_amp).c_str(), c.files_created,
                c.links_created, c.entries_removed, c.dirs_created,
                c.dirs_removed, c.syncs, c.bytes_read);
  out->append(buf);
}

IoCounters TotalCounters(const BenchReport& report) {
  IoCounters total;
  for (const auto& p : report.phases) {
    total.data_bytes_written += p.counters.data_bytes_written;
    total.files_created += p.counters.files_created;
    total.links_created += p.counters.links_created;
    total.entries_removed += p.counters.entries_removed;
    total.dirs_created += p.counters.dirs_created;
    total.dirs_removed += p.counters.dirs_removed;
    total.syncs += p.counters.syncs;
    total.bytes_read += p.counters.bytes_read;
  }
  return total;
}

}  // namespace

std::string emit_report(const BenchReport& report, const std::string& format) {
  std::string out;
  IoCounters total = TotalCounters(report);
  uint64_t total_ops = 0;
  for (const auto& p : report.phases) total_ops += p.ops;

  if (format == "csv") {
    out +=
        "benchmark,engine,phase,ops,micros_per_op,user_payload_bytes,"
        "data_bytes_written,write_amp,files_created,links_created,"
        "entries_removed,dirs_created,dirs_removed,syncs,bytes_read\n";
    for (const auto& p : report.phases) {
      CsvRow(&out, report, p.name, p.ops, p.micros_per_op,
             p.user_payload_bytes, p.counters, p.write_amp());
    }
    CsvRow(&out, report, "overall", total_ops, 0.0, report.total_payload(),
           total, report.overall_write_amp());
    return out;
  }

  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s on %s engine\n",
                report.benchmark.c_str(), report.engine.c_str());
  out += buf;
  for (const auto& p : report.phases) {
    std::snprintf(buf, sizeof(buf),
                  "  %-10s %10" PRIu64 " ops  %10s us/op  payload %12" PRIu64
                  "  written %12" PRIu64 "  write_amp %s\n",
                  p.name.c_str(), p.ops, FormatDouble(p.micros_per_op).c_str(),
                  p.user_payload_bytes, p.counters.data_bytes_written,
                  FormatDouble(p.write_amp()).c_str());
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "  %-10s files %8" PRIu64 "  links %8" PRIu64
                  "  removes %8" PRIu64 "  dirs +%" PRIu64 "/-%" PRIu64
                  "  syncs %8" PRIu64 "  read %12" PRIu64 "\n",
                  "", p.counters.files_created, p.counters.links_created,
                  p.counters.entries_removed, p.counters.dirs_created,
                  p.counters.dirs_removed, p.counters.syncs,
                  p.counters.bytes_read);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf),
                "  %-10s %10" PRIu64 " ops  %10s us/op  payload %12" PRIu64
                "  written %12" PRIu64 "  write_amp %s\n",
                "overall", total_ops, FormatDouble(0.0).c_str(),
                report.total_payload(), report.total_written(),
                FormatDouble(report.overall_write_amp()).c_str());
  out += buf;
  return out;
}

}  // namespace dentrykv
