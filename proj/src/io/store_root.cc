// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#include "io/store_root.h"

#include <dirent.h>
#include <fcntl.h>
#include <sys/stat.h>
#include <sys/types.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace dentrykv {

namespace {

Status PosixError(const std::string& context, int err) {
  const std::string msg = context + ": " + std::strerror(err);
  switch (err) {
    case EACCES:
    case EPERM:
      return Status::PermissionDenied(msg);
    case ENOTDIR:
      return Status::NotADirectory(msg);
    default:
      return Status::IOError(msg);
  }
}

// Writes all of data to fd, retrying on short writes.
Status WriteAll(int fd, std::string_view data, const std::string& context) {
  const char* p = data.data();
  size_t left = data.size();
  while (left > 0) {
    ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      return PosixError(context, errno);
    }
    p += n;
    left -= static_cast<size_t>(n);
  }
  return Status::OK();
}

}  // namespace

Status StoreRoot::Open(const std::string& path, bool sync_enabled,
                       std::shared_ptr<TestHooks> hooks,
                       std::unique_ptr<StoreRoot>* out) {
  struct stat st;
  if (::stat(path.c_str(), &st) == 0) {
    if (!S_ISDIR(st.st_mode)) {
      return Status::NotADirectory("store root is not a directory: " + path);
    }
  } else if (errno == ENOENT) {
    if (::mkdir(path.c_str(), 0755) != 0 && errno != EEXIST) {
      return PosixError("mkdir " + path, errno);
    }
  } else {
    return PosixError("stat " + path, errno);
  }
  out->reset(new StoreRoot(path, sync_enabled, std::move(hooks)));
  return Status::OK();
}

Status StoreRoot::Resolve(std::string_view rel_path, std::string* full) const {
  if (!rel_path.empty() && rel_path.front() == '/') {
    return Status::InvalidArgument("absolute path rejected: " +
                                   std::string(rel_path));
  }
  // Walk the components; "." and ".." never appear in store paths.
  size_t start = 0;
  while (start <= rel_path.size() && !rel_path.empty()) {
    size_t end = rel_path.find('/', start);
    if (end == std::string_view::npos) end = rel_path.size();
    std::string_view comp = rel_path.substr(start, end - start);
    if (comp.empty() || comp == "." || comp == "..") {
      return Status::InvalidArgument("path escapes store root: " +
                                     std::string(rel_path));
    }
    if (end == rel_path.size()) break;
    start = end + 1;
  }
  full->assign(root_path_);
  if (!rel_path.empty()) {
    full->push_back('/');
    full->append(rel_path);
  }
  return Status::OK();
}

Status StoreRoot::CreateDir(std::string_view rel_path) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  if (::mkdir(full.c_str(), 0755) != 0) {
    if (errno == EEXIST) {
      return Status::DirExists("directory exists: " + std::string(rel_path));
    }
    return PosixError("mkdir " + std::string(rel_path), errno);
  }
  dirs_created_.fetch_add(1, std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::CreateDirIfMissing(std::string_view rel_path) {
  Status s = CreateDir(rel_path);
  if (s.code() == StatusCode::kDirExists) return Status::OK();
  return s;
}

Status StoreRoot::RemoveDir(std::string_view rel_path) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  if (::rmdir(full.c_str()) != 0) {
    if (errno == ENOENT) {
      return Status::DirMissing("directory missing: " + std::string(rel_path));
    }
    return PosixError("rmdir " + std::string(rel_path), errno);
  }
  dirs_removed_.fetch_add(1, std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::WriteFileExcl(std::string_view rel_path,
                                std::string_view data) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      return Status::DstExists("file exists: " + std::string(rel_path));
    }
    return PosixError("create " + std::string(rel_path), errno);
  }
  s = WriteAll(fd, data, "write " + std::string(rel_path));
  if (!s.ok()) {
    ::close(fd);
    ::unlink(full.c_str());
    return s;
  }
  if (::close(fd) != 0) {
    return PosixError("close " + std::string(rel_path), errno);
  }
  files_created_.fetch_add(1, std::memory_order_relaxed);
  data_bytes_written_.fetch_add(data.size(), std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::HardLink(std::string_view src, std::string_view dst) {
  std::string src_full, dst_full;
  Status s = Resolve(src, &src_full);
  if (s.ok()) s = Resolve(dst, &dst_full);
  if (!s.ok()) return s;
  if (::link(src_full.c_str(), dst_full.c_str()) != 0) {
    switch (errno) {
      case ENOENT:
        return Status::SrcMissing("link source missing: " + std::string(src));
      case EEXIST:
        return Status::DstExists("link target exists: " + std::string(dst));
      case EXDEV:
        return Status::CrossDevice("link across devices: " + std::string(src) +
                                   " -> " + std::string(dst));
      default:
        return PosixError("link " + std::string(src), errno);
    }
  }
  links_created_.fetch_add(1, std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::RemoveFile(std::string_view rel_path) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  if (::unlink(full.c_str()) != 0) {
    if (errno == ENOENT) {
      return Status::SrcMissing("file missing: " + std::string(rel_path));
    }
    return PosixError("unlink " + std::string(rel_path), errno);
  }
  entries_removed_.fetch_add(1, std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::Rename(std::string_view src, std::string_view dst) {
  std::string src_full, dst_full;
  Status s = Resolve(src, &src_full);
  if (s.ok()) s = Resolve(dst, &dst_full);
  if (!s.ok()) return s;
  if (::rename(src_full.c_str(), dst_full.c_str()) != 0) {
    return PosixError("rename " + std::string(src), errno);
  }
  return Status::OK();
}

Status StoreRoot::ListDir(std::string_view rel_path,
                          std::vector<std::string>* names) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  names->clear();
  DIR* dir = ::opendir(full.c_str());
  if (dir == nullptr) {
    if (errno == ENOENT) {
      return Status::DirMissing("directory missing: " + std::string(rel_path));
    }
    return PosixError("opendir " + std::string(rel_path), errno);
  }
  struct dirent* entry;
  while ((entry = ::readdir(dir)) != nullptr) {
    const char* n = entry->d_name;
    if (std::strcmp(n, ".") == 0 || std::strcmp(n, "..") == 0) continue;
    names->emplace_back(n);
  }
  ::closedir(dir);
  return Status::OK();
}

Status StoreRoot::ReadFile(std::string_view rel_path, std::string* data) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) {
    if (errno == ENOENT) {
      return Status::NotFound("file missing: " + std::string(rel_path));
    }
    return PosixError("open " + std::string(rel_path), errno);
  }
  data->clear();
  char buf[1 << 16];
  while (true) {
    ssize_t n = ::read(fd, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      return PosixError("read " + std::string(rel_path), err);
    }
    if (n == 0) break;
    data->append(buf, static_cast<size_t>(n));
  }
  ::close(fd);
  bytes_read_.fetch_add(data->size(), std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::ReadAt(std::string_view rel_path, uint64_t offset, size_t n,
                         std::string* data) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) {
    if (errno == ENOENT) {
      return Status::NotFound("file missing: " + std::string(rel_path));
    }
    return PosixError("open " + std::string(rel_path), errno);
  }
  data->resize(n);
  size_t got = 0;
  while (got < n) {
    ssize_t r = ::pread(fd, data->data() + got, n - got,
                        static_cast<off_t>(offset + got));
    if (r < 0) {
      if (errno == EINTR) continue;
      int err = errno;
      ::close(fd);
      return PosixError("pread " + std::string(rel_path), err);
    }
    if (r == 0) break;
    got += static_cast<size_t>(r);
  }
  ::close(fd);
  data->resize(got);
  bytes_read_.fetch_add(got, std::memory_order_relaxed);
  if (got < n) {
    return Status::Corruption("short read at offset " + std::to_string(offset) +
                              " in " + std::string(rel_path));
  }
  return Status::OK();
}

Status StoreRoot::FileSize(std::string_view rel_path, uint64_t* size) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  struct stat st;
  if (::stat(full.c_str(), &st) != 0) {
    if (errno == ENOENT) {
      return Status::NotFound("file missing: " + std::string(rel_path));
    }
    return PosixError("stat " + std::string(rel_path), errno);
  }
  *size = static_cast<uint64_t>(st.st_size);
  return Status::OK();
}

bool StoreRoot::Exists(std::string_view rel_path) {
  std::string full;
  if (!Resolve(rel_path, &full).ok()) return false;
  struct stat st;
  return ::stat(full.c_str(), &st) == 0;
}

bool StoreRoot::DirectoryExists(std::string_view rel_path) {
  std::string full;
  if (!Resolve(rel_path, &full).ok()) return false;
  struct stat st;
  return ::stat(full.c_str(), &st) == 0 && S_ISDIR(st.st_mode);
}

Status StoreRoot::InodeOf(std::string_view rel_path, uint64_t* ino) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  struct stat st;
  if (::stat(full.c_str(), &st) != 0) {
    if (errno == ENOENT) {
      return Status::NotFound("file missing: " + std::string(rel_path));
    }
    return PosixError("stat " + std::string(rel_path), errno);
  }
  *ino = static_cast<uint64_t>(st.st_ino);
  return Status::OK();
}

Status StoreRoot::DoSync(const std::string& rel_path, int fd, bool is_dir) {
  if (!sync_enabled_) return Status::OK();
  if (hooks_ != nullptr && hooks_->sync_fault) {
    Status s = hooks_->sync_fault(rel_path);
    if (!s.ok()) return s;
  }
  if (::fsync(fd) != 0) {
    return Status::SyncFailed("fsync " + rel_path + (is_dir ? " (dir)" : "") +
                              ": " + std::strerror(errno));
  }
  syncs_.fetch_add(1, std::memory_order_relaxed);
  return Status::OK();
}

Status StoreRoot::SyncFile(std::string_view rel_path) {
  if (!sync_enabled_) return Status::OK();
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) return PosixError("open for sync " + std::string(rel_path), errno);
  s = DoSync(std::string(rel_path), fd, false);
  ::close(fd);
  return s;
}

Status StoreRoot::SyncDir(std::string_view rel_path) {
  if (!sync_enabled_) return Status::OK();
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (fd < 0) return PosixError("open for sync " + std::string(rel_path), errno);
  s = DoSync(std::string(rel_path), fd, true);
  ::close(fd);
  return s;
}

Status StoreRoot::NewAppendable(std::string_view rel_path,
                                std::unique_ptr<AppendableFile>* out) {
  std::string full;
  Status s = Resolve(rel_path, &full);
  if (!s.ok()) return s;
  int fd = ::open(full.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      return Status::DstExists("file exists: " + std::string(rel_path));
    }
    return PosixError("create " + std::string(rel_path), errno);
  }
  files_created_.fetch_add(1, std::memory_order_relaxed);
  out->reset(new AppendableFile(this, std::string(rel_path), fd));
  return Status::OK();
}

IoCounters StoreRoot::CountersSnapshot() const {
  IoCounters c;
  c.data_bytes_written = data_bytes_written_.load(std::memory_order_relaxed);
  c.files_created = files_created_.load(std::memory_order_relaxed);
  c.links_created = links_created_.load(std::memory_order_relaxed);
  c.entries_removed = entries_removed_.load(std::memory_order_relaxed);
  c.dirs_created = dirs_created_.load(std::memory_order_relaxed);
  c.dirs_removed = dirs_removed_.load(std::memory_order_relaxed);
  c.syncs = syncs_.load(std::memory_order_relaxed);
  c.bytes_read = bytes_read_.load(std::memory_order_relaxed);
  return c;
}

void StoreRoot::ResetCounters() {
  data_bytes_written_.store(0, std::memory_order_relaxed);
  files_created_.store(0, std::memory_order_relaxed);
  links_created_.store(0, std::memory_order_relaxed);
  entries_removed_.store(0, std::memory_order_relaxed);
  dirs_created_.store(0, std::memory_order_relaxed);
  dirs_removed_.store(0, std::memory_order_relaxed);
  syncs_.store(0, std::memory_order_relaxed);
  bytes_read_.store(0, std::memory_order_relaxed);
}

AppendableFile::~AppendableFile() {
  if (fd_ >= 0) ::close(fd_);
}

Status AppendableFile::Append(std::string_view data) {
  if (fd_ < 0) return Status::IOError("append to closed file: " + rel_path_);
  Status s = WriteAll(fd_, data, "append " + rel_path_);
  if (!s.ok()) return s;
  size_ += data.size();
  root_->data_bytes_written_.fetch_add(data.size(), std::memory_order_relaxed);
  return Status::OK();
}

Status AppendableFile::Sync() {
  if (fd_ < 0) return Status::IOError("sync of closed file: " + rel_path_);
  return root_->DoSync(rel_path_, fd_, false);
}

Status AppendableFile::Close() {
  if (fd_ < 0) return Status::OK();
  int rc = ::close(fd_);
  fd_ = -1;
  if (rc != 0) return PosixError("close " + rel_path_, errno);
  return Status::OK();
}

}  // namespace dentrykv
