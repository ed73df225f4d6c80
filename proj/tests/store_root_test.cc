// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "io/store_root.h"
#include "test_util.h"

using namespace dentrykv;

namespace {

std::unique_ptr<StoreRoot> OpenRoot(const std::string& path,
                                    bool sync_enabled = false,
                                    std::shared_ptr<TestHooks> hooks = nullptr) {
  std::unique_ptr<StoreRoot> root;
  REQUIRE(StoreRoot::Open(path, sync_enabled, hooks, &root).ok());
  return root;
}

}  // namespace

TEST_CASE("open creates the root and starts with zero counters") {
  test::TempDir dir("root-open");
  auto root = OpenRoot(dir.path());
  CHECK(root->CountersSnapshot() == IoCounters{});

  // Reopening the same empty directory yields the same zeroed state.
  auto again = OpenRoot(dir.path());
  CHECK(again->CountersSnapshot() == IoCounters{});
}

TEST_CASE("open on a regular file is NotADirectory") {
  test::TempDir dir("root-file");
  std::filesystem::create_directories(dir.path());
  std::string file = dir.path() + "/plain";
  std::ofstream(file) << "x";
  std::unique_ptr<StoreRoot> root;
  CHECK(StoreRoot::Open(file, false, nullptr, &root).code() ==
        StatusCode::kNotADirectory);
}

TEST_CASE("operations stay inside the root") {
  test::TempDir dir("root-contain");
  auto root = OpenRoot(dir.path());
  std::string data;
  for (const char* path : {"/etc/passwd", "../escape", "a/../../b",
                           "a//b", "./x", ".."}) {
    CHECK_FALSE(root->WriteFileExcl(path, "x").ok());
    CHECK_FALSE(root->ReadFile(path, &data).ok());
    CHECK_FALSE(root->CreateDir(path).ok());
  }
  // Nothing escaped.
  CHECK_FALSE(std::filesystem::exists(dir.path() + "/../escape"));
}

TEST_CASE("write read and exact byte accounting") {
  test::TempDir dir("root-rw");
  auto root = OpenRoot(dir.path());

  std::string payload(100, 'a');
  REQUIRE(root->WriteFileExcl("f", payload).ok());
  CHECK(root->CountersSnapshot().data_bytes_written == 100);
  CHECK(root->CountersSnapshot().files_created == 1);

  std::string back;
  REQUIRE(root->ReadFile("f", &back).ok());
  CHECK(back == payload);
  CHECK(root->CountersSnapshot().bytes_read == 100);

  CHECK(root->WriteFileExcl("f", "again").code() == StatusCode::kDstExists);
  CHECK(root->ReadFile("missing", &back).IsNotFound());

  uint64_t size = 0;
  REQUIRE(root->FileSize("f", &size).ok());
  CHECK(size == 100);

  // ReadAt serves exact extents and rejects short reads.
  std::string slice;
  REQUIRE(root->ReadAt("f", 10, 20, &slice).ok());
  CHECK(slice == payload.substr(10, 20));
  CHECK(root->ReadAt("f", 90, 20, &slice).IsCorruption());
}

TEST_CASE("random call script matches an accumulator oracle") {
  test::TempDir dir("root-script");
  auto root = OpenRoot(dir.path());
  REQUIRE(root->CreateDir("d").ok());

  auto rng = test::Rng(11);
  IoCounters oracle;
  oracle.dirs_created = 1;
  std::vector<std::string> files;
  for (int i = 0; i < 500; i++) {
    switch (rng() % 4) {
      case 0:
      case 1: {
        std::string name = "d/f" + std::to_string(i);
        std::string payload = test::RandomValue(rng, 300);
        REQUIRE(root->WriteFileExcl(name, payload).ok());
        oracle.files_created++;
        oracle.data_bytes_written += payload.size();
        files.push_back(name);
        break;
      }
      case 2: {
        if (files.empty()) break;
        std::string src = files[rng() % files.size()];
        std::string dst = "d/l" + std::to_string(i);
        REQUIRE(root->HardLink(src, dst).ok());
        oracle.links_created++;  // links never count as data written
        files.push_back(dst);
        break;
      }
      case 3: {
        if (files.empty()) break;
        size_t pick = rng() % files.size();
        REQUIRE(root->RemoveFile(files[pick]).ok());
        oracle.entries_removed++;
        files.erase(files.begin() + pick);
        break;
      }
    }
  }
  IoCounters got = root->CountersSnapshot();
  CHECK(got.data_bytes_written == oracle.data_bytes_written);
  CHECK(got.files_created == oracle.files_created);
  CHECK(got.links_created == oracle.links_created);
  CHECK(got.entries_removed == oracle.entries_removed);
  CHECK(got.dirs_created == oracle.dirs_created);

  root->ResetCounters();
  CHECK(root->CountersSnapshot() == IoCounters{});
}

TEST_CASE("hard links alias the same bytes") {
  test::TempDir dir("root-link");
  auto root = OpenRoot(dir.path());
  REQUIRE(root->CreateDir("L0").ok());
  REQUIRE(root->CreateDir("L1").ok());
  REQUIRE(root->WriteFileExcl("L0/k1", "payload-bytes").ok());

  uint64_t before = root->CountersSnapshot().data_bytes_written;
  REQUIRE(root->HardLink("L0/k1", "L1/k1").ok());
  CHECK(root->CountersSnapshot().data_bytes_written == before);

  std::string via_dst;
  REQUIRE(root->ReadFile("L1/k1", &via_dst).ok());
  CHECK(via_dst == "payload-bytes");

  // Same inode through both names.
  uint64_t src_inode = 0, dst_inode = 0;
  REQUIRE(root->InodeOf("L0/k1", &src_inode).ok());
  REQUIRE(root->InodeOf("L1/k1", &dst_inode).ok());
  CHECK(src_inode == dst_inode);

  // Removing the source leaves the data reachable through the link.
  REQUIRE(root->RemoveFile("L0/k1").ok());
  via_dst.clear();
  REQUIRE(root->ReadFile("L1/k1", &via_dst).ok());
  CHECK(via_dst == "payload-bytes");

  CHECK(root->HardLink("L0/k1", "L1/x").code() == StatusCode::kSrcMissing);
  REQUIRE(root->WriteFileExcl("L0/k2", "z").ok());
  CHECK(root->HardLink("L0/k2", "L1/k1").code() == StatusCode::kDstExists);
}

TEST_CASE("list_dir returns exactly the created names") {
  test::TempDir dir("root-list");
  auto root = OpenRoot(dir.path());
  REQUIRE(root->CreateDir("d").ok());

  std::vector<std::string> listed;
  REQUIRE(root->ListDir("d", &listed).ok());
  CHECK(listed.empty());

  std::set<std::string> expected;
  for (int i = 0; i < 1000; i++) {
    std::string name = "e" + std::to_string(i);
    REQUIRE(root->WriteFileExcl("d/" + name, "x").ok());
    expected.insert(name);
  }
  REQUIRE(root->ListDir("d", &listed).ok());
  CHECK(std::set<std::string>(listed.begin(), listed.end()) == expected);

  CHECK(root->ListDir("nope", &listed).code() == StatusCode::kDirMissing);
}

TEST_CASE("dir create and remove") {
  test::TempDir dir("root-dirs");
  auto root = OpenRoot(dir.path());
  REQUIRE(root->CreateDir("a").ok());
  CHECK(root->CreateDir("a").code() == StatusCode::kDirExists);
  REQUIRE(root->CreateDirIfMissing("a").ok());
  CHECK(root->DirectoryExists("a"));
  REQUIRE(root->RemoveDir("a").ok());
  CHECK_FALSE(root->DirectoryExists("a"));
  CHECK(root->RemoveDir("a").code() == StatusCode::kDirMissing);
  IoCounters c = root->CountersSnapshot();
  CHECK(c.dirs_created == 1);
  CHECK(c.dirs_removed == 1);
}

TEST_CASE("appendable files account every byte") {
  test::TempDir dir("root-append");
  auto root = OpenRoot(dir.path(), true);
  std::unique_ptr<AppendableFile> file;
  REQUIRE(root->NewAppendable("log", &file).ok());
  uint64_t expect = 0;
  auto rng = test::Rng(5);
  for (int i = 0; i < 100; i++) {
    std::string chunk = test::RandomValue(rng, 100);
    REQUIRE(file->Append(chunk).ok());
    expect += chunk.size();
  }
  CHECK(file->size() == expect);
  CHECK(root->CountersSnapshot().data_bytes_written == expect);

  REQUIRE(file->Sync().ok());
  CHECK(root->CountersSnapshot().syncs == 1);
  REQUIRE(file->Close().ok());

  std::string all;
  REQUIRE(root->ReadFile("log", &all).ok());
  CHECK(all.size() == expect);
}

TEST_CASE("disabled sync never reaches the disk barrier") {
  test::TempDir dir("root-nosync");
  auto root = OpenRoot(dir.path(), false);
  REQUIRE(root->WriteFileExcl("f", "x").ok());
  REQUIRE(root->SyncFile("f").ok());
  REQUIRE(root->SyncDir("").ok());
  std::unique_ptr<AppendableFile> file;
  REQUIRE(root->NewAppendable("log", &file).ok());
  REQUIRE(file->Append("abc").ok());
  REQUIRE(file->Sync().ok());
  CHECK(root->CountersSnapshot().syncs == 0);
}

TEST_CASE("injected sync faults surface and do not count") {
  test::TempDir dir("root-fault");
  auto hooks = std::make_shared<TestHooks>();
  int failures_left = 2;
  hooks->sync_fault = [&](const std::string& rel_path) {
    if (failures_left > 0 && rel_path == "log") {
      failures_left--;
      return Status::SyncFailed("injected");
    }
    return Status::OK();
  };
  auto root = OpenRoot(dir.path(), true, hooks);
  std::unique_ptr<AppendableFile> file;
  REQUIRE(root->NewAppendable("log", &file).ok());
  REQUIRE(file->Append("abc").ok());
  CHECK(file->Sync().IsSyncFailed());
  CHECK(file->Sync().IsSyncFailed());
  CHECK(root->CountersSnapshot().syncs == 0);
  // After the fault clears, the sync goes through and counts.
  REQUIRE(file->Sync().ok());
  CHECK(root->CountersSnapshot().syncs == 1);
}

TEST_CASE("rename replaces atomically") {
  test::TempDir dir("root-rename");
  auto root = OpenRoot(dir.path());
  REQUIRE(root->WriteFileExcl("tmp", "new-contents").ok());
  REQUIRE(root->WriteFileExcl("target", "old").ok());
  REQUIRE(root->Rename("tmp", "target").ok());
  std::string data;
  REQUIRE(root->ReadFile("target", &data).ok());
  CHECK(data == "new-contents");
  CHECK_FALSE(root->Exists("tmp"));
}
