// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// Benchmark driver. Runs one workload against one engine and prints the
// per-phase report:
//
//   dentrykv-bench --engine dentry --benchmark wdw --num 100000
//     --value-size 512 --delete-pct 50 --l0-limit 500 --sync off
//     --db /tmp/bench-db --format csv
//
// The store at --db is destroyed at the start of every run.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "bench/workload.h"

int main(int argc, char** argv) {
  CLI::App app{"DentryKV benchmark driver"};

  dentrykv::WorkloadSpec spec;
  std::string engine = "dentry";
  std::string sync = "on";
  std::string format = "human";
  spec.db_path = "/tmp/dentrykv-bench";

  app.add_option("--engine", engine, "dentry | packed")
      ->check(CLI::IsMember({"dentry", "packed"}));
  app.add_option("--benchmark", spec.benchmark,
                 "fillseq | fillrandom | readseq | readrandom | wdw | wdr")
      ->required();
  app.add_option("--num", spec.num, "operations per fill phase");
  app.add_option("--key-size", spec.key_size, "key bytes (>= 8)");
  app.add_option("--value-size", spec.value_size, "value bytes");
  app.add_option("--delete-pct", spec.delete_pct,
                 "percent deleted in wdw/wdr");
  app.add_option("--seed", spec.seed, "workload seed");
  app.add_option("--db", spec.db_path, "store directory");
  app.add_option("--sync", sync, "fsync on (default) or off")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--l0-limit", spec.l0_limit, "L0 entry limit");
  app.add_option("--value-cache-bytes", spec.value_cache_bytes,
                 "value cache capacity (0 disables)");
  app.add_option("--handle-cache-entries", spec.handle_cache_entries,
                 "handle cache capacity (0 disables)");
  app.add_option("--format", format, "human | csv")
      ->check(CLI::IsMember({"human", "csv"}));

  CLI11_PARSE(app, argc, argv);

  spec.engine = engine == "dentry" ? dentrykv::EngineKind::kDentry
                                   : dentrykv::EngineKind::kPacked;
  spec.sync = sync == "on";

  dentrykv::BenchReport report;
  dentrykv::Status s = dentrykv::run_workload(spec, &report);
  if (!s.ok()) {
    std::fprintf(stderr, "benchmark failed: %s\n", s.ToString().c_str());
    return 1;
  }
  std::fputs(dentrykv::emit_report(report, format).c_str(), stdout);
  return 0;
}
