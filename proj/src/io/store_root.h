// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.
//
// All file and directory operations the engine performs go through a
// StoreRoot. It confines every path beneath the store's root directory,
// counts every byte and call so write amplification can be measured, and
// gives tests a place to inject sync faults. Nothing else in the engine may
// touch the filesystem directly.

#ifndef DENTRYKV_IO_STORE_ROOT_H_
#define DENTRYKV_IO_STORE_ROOT_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dentrykv/options.h"
#include "dentrykv/status.h"

namespace dentrykv {

class StoreRoot;

// Append-only file handle for logs and the manifest. Created exclusively;
// Append counts payload bytes, Sync honors the root's sync switch.
class AppendableFile {
 public:
  ~AppendableFile();
  AppendableFile(const AppendableFile&) = delete;
  AppendableFile& operator=(const AppendableFile&) = delete;

  Status Append(std::string_view data);
  Status Sync();
  Status Close();
  uint64_t size() const { return size_; }

 private:
  friend class StoreRoot;
  AppendableFile(StoreRoot* root, std::string rel_path, int fd)
      : root_(root), rel_path_(std::move(rel_path)), fd_(fd) {}

  StoreRoot* root_;
  std::string rel_path_;
  int fd_;
  uint64_t size_ = 0;
};

class StoreRoot {
 public:
  // Creates the root directory if absent. Counters start at zero.
  static Status Open(const std::string& path, bool sync_enabled,
                     std::shared_ptr<TestHooks> hooks,
                     std::unique_ptr<StoreRoot>* out);

  ~StoreRoot() = default;
  StoreRoot(const StoreRoot&) = delete;
  StoreRoot& operator=(const StoreRoot&) = delete;

  // Every rel_path below is relative to the root; "" names the root itself
  // where a directory is expected. Absolute paths and ".." components are
  // rejected.

  Status CreateDir(std::string_view rel_path);            // DirExists
  Status CreateDirIfMissing(std::string_view rel_path);   // counts only new
  Status RemoveDir(std::string_view rel_path);            // DirMissing
  Status WriteFileExcl(std::string_view rel_path, std::string_view data);
  Status HardLink(std::string_view src, std::string_view dst);
  Status RemoveFile(std::string_view rel_path);           // SrcMissing
  Status Rename(std::string_view src, std::string_view dst);
  Status ListDir(std::string_view rel_path, std::vector<std::string>* names);
  Status ReadFile(std::string_view rel_path, std::string* data);
  Status ReadAt(std::string_view rel_path, uint64_t offset, size_t n,
                std::string* data);
  Status FileSize(std::string_view rel_path, uint64_t* size);
  bool Exists(std::string_view rel_path);
  bool DirectoryExists(std::string_view rel_path);
  Status InodeOf(std::string_view rel_path, uint64_t* ino);

  Status SyncFile(std::string_view rel_path);
  Status SyncDir(std::string_view rel_path);

  Status NewAppendable(std::string_view rel_path,
                       std::unique_ptr<AppendableFile>* out);

  IoCounters CountersSnapshot() const;
  void ResetCounters();

  const std::string& root_path() const { return root_path_; }
  bool sync_enabled() const { return sync_enabled_; }

 private:
  friend class AppendableFile;

  StoreRoot(std::string root_path, bool sync_enabled,
            std::shared_ptr<TestHooks> hooks)
      : root_path_(std::move(root_path)),
        sync_enabled_(sync_enabled),
        hooks_(std::move(hooks)) {}

  // Validates containment and produces the absolute path.
  Status Resolve(std::string_view rel_path, std::string* full) const;
  Status DoSync(const std::string& rel_path, int fd, bool is_dir);

  const std::string root_path_;
  const bool sync_enabled_;
  const std::shared_ptr<TestHooks> hooks_;

  std::atomic<uint64_t> data_bytes_written_{0};
  std::atomic<uint64_t> files_created_{0};
  std::atomic<uint64_t> links_created_{0};
  std::atomic<uint64_t> entries_removed_{0};
  std::atomic<uint64_t> dirs_created_{0};
  std::atomic<uint64_t> dirs_removed_{0};
  std::atomic<uint64_t> syncs_{0};
  std::atomic<uint64_t> bytes_read_{0};
};

}  // namespace dentrykv

#endif  // DENTRYKV_IO_STORE_ROOT_H_
