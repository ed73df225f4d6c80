// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Benchmark workloads over either engine. Keys are fixed-width zero-padded
// decimal counters; orders and sampling are seeded, so a spec plus a seed
// fully determines the operation sequence. The store runs its compactions
// synchronously on the benchmark thread, which makes two runs of the same
// spec byte-identical on disk.
//
// Write amplification is data_bytes_written / user payload, where a put
// contributes key + value bytes, a delete key bytes, and a read nothing.

#ifndef DENTRYKV_BENCH_WORKLOAD_H_
#define DENTRYKV_BENCH_WORKLOAD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dentrykv/options.h"
#include "dentrykv/status.h"

namespace dentrykv {

struct WorkloadSpec {
  // fillseq | fillrandom | readseq | readrandom | wdw | wdr
  std::string benchmark = "fillseq";
  uint64_t num = 100000;
  size_t key_size = 16;  // >= 8; keys are zero-padded decimal counters
  size_t value_size = 100;
  int delete_pct = 50;  // wdw / wdr middle phase
  uint64_t seed = 1;
  EngineKind engine = EngineKind::kDentry;
  std::string db_path;

  // Engine overrides. The defaults are desk scale: the store's level
  // limits are scaled down so a 10^5-op run exercises real compactions.
  uint64_t l0_limit = 500;
  bool sync = true;
  size_t value_cache_bytes = 8 << 20;
  size_t handle_cache_entries = 1000;

  Status Validate() const;
};

struct PhaseReport {
  std::string name;
  uint64_t ops = 0;
  double micros_per_op = 0.0;
  uint64_t user_payload_bytes = 0;
  IoCounters counters;  // reset at the phase boundary

  // data_bytes_written / user_payload_bytes; 0 when no payload.
  double write_amp() const {
    if (user_payload_bytes == 0) return 0.0;
    return static_cast<double>(counters.data_bytes_written) /
           static_cast<double>(user_payload_bytes);
  }
};

struct BenchReport {
  std::string benchmark;
  std::string engine;
  std::vector<PhaseReport> phases;

  uint64_t total_payload() const;
  uint64_t total_written() const;
  double overall_write_amp() const;
};

// Key `index` under `spec`: the decimal counter, zero padded to key_size.
std::string BenchKey(const WorkloadSpec& spec, uint64_t index);
// Deterministic pseudo-random value for key `index`.
std::string BenchValue(const WorkloadSpec& spec, uint64_t index);

// Destroys anything at spec.db_path, then runs the benchmark's phases.
Status run_workload(const WorkloadSpec& spec, BenchReport* report);

// Renders a report. Both formats print the same numbers; the csv header is
//   benchmark,engine,phase,ops,micros_per_op,user_payload_bytes,
//   data_bytes_written,write_amp,files_created,links_created,
//   entries_removed,dirs_created,dirs_removed,syncs,bytes_read
// (one line) with one row per phase plus an "overall" row.
std::string emit_report(const BenchReport& report, const std::string& format);

}  // namespace dentrykv

#endif  // DENTRYKV_BENCH_WORKLOAD_H_
