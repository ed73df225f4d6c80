// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#ifndef DENTRYKV_INCLUDE_STATUS_H_
#define DENTRYKV_INCLUDE_STATUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace dentrykv {

enum class StatusCode : uint8_t {
  kOk = 0,
  kNotFound,
  kCorruption,
  kIOError,
  kInvalidArgument,
  kPermissionDenied,
  kNotADirectory,
  kSrcMissing,
  kDstExists,
  kCrossDevice,
  kDirMissing,
  kDirExists,
  kSyncFailed,
  kKeyTooLong,
  kEmptyKey,
  kMalformedName,
  kSealed,
  kInjectedCrash,
};

// Plain code + message pair returned by every fallible operation.
class Status {
 public:
  Status() : code_(StatusCode::kOk) {}
  Status(StatusCode code, std::string_view msg) : code_(code), msg_(msg) {}

  static Status OK() { return Status(); }
  static Status NotFound(std::string_view m = "") { return {StatusCode::kNotFound, m}; }
  static Status Corruption(std::string_view m = "") { return {StatusCode::kCorruption, m}; }
  static Status IOError(std::string_view m = "") { return {StatusCode::kIOError, m}; }
  static Status InvalidArgument(std::string_view m = "") { return {StatusCode::kInvalidArgument, m}; }
  static Status PermissionDenied(std::string_view m = "") { return {StatusCode::kPermissionDenied, m}; }
  static Status NotADirectory(std::string_view m = "") { return {StatusCode::kNotADirectory, m}; }
  static Status SrcMissing(std::string_view m = "") { return {StatusCode::kSrcMissing, m}; }
  static Status DstExists(std::string_view m = "") { return {StatusCode::kDstExists, m}; }
  static Status CrossDevice(std::string_view m = "") { return {StatusCode::kCrossDevice, m}; }
  static Status DirMissing(std::string_view m = "") { return {StatusCode::kDirMissing, m}; }
  static Status DirExists(std::string_view m = "") { return {StatusCode::kDirExists, m}; }
  static Status SyncFailed(std::string_view m = "") { return {StatusCode::kSyncFailed, m}; }
  static Status KeyTooLong(std::string_view m = "") { return {StatusCode::kKeyTooLong, m}; }
  static Status EmptyKey(std::string_view m = "") { return {StatusCode::kEmptyKey, m}; }
  static Status MalformedName(std::string_view m = "") { return {StatusCode::kMalformedName, m}; }
  static Status Sealed(std::string_view m = "") { return {StatusCode::kSealed, m}; }
  static Status InjectedCrash(std::string_view m = "") { return {StatusCode::kInjectedCrash, m}; }

  bool ok() const { return code_ == StatusCode::kOk; }
  bool IsNotFound() const { return code_ == StatusCode::kNotFound; }
  bool IsCorruption() const { return code_ == StatusCode::kCorruption; }
  bool IsSyncFailed() const { return code_ == StatusCode::kSyncFailed; }
  bool IsInjectedCrash() const { return code_ == StatusCode::kInjectedCrash; }
  StatusCode code() const { return code_; }
  const std::string& message() const { return msg_; }

  std::string ToString() const {
    if (ok()) return "OK";
    std::string s = CodeName(code_);
    if (!msg_.empty()) {
      s += ": ";
      s += msg_;
    }
    return s;
  }

  static const char* CodeName(StatusCode c) {
    switch (c) {
      case StatusCode::kOk: return "OK";
      case StatusCode::kNotFound: return "NotFound";
      case StatusCode::kCorruption: return "Corruption";
      case StatusCode::kIOError: return "IOError";
      case StatusCode::kInvalidArgument: return "InvalidArgument";
      case StatusCode::kPermissionDenied: return "PermissionDenied";
      case StatusCode::kNotADirectory: return "NotADirectory";
      case StatusCode::kSrcMissing: return "SrcMissing";
      case StatusCode::kDstExists: return "DstExists";
      case StatusCode::kCrossDevice: return "CrossDevice";
      case StatusCode::kDirMissing: return "DirMissing";
      case StatusCode::kDirExists: return "DirExists";
      case StatusCode::kSyncFailed: return "SyncFailed";
      case StatusCode::kKeyTooLong: return "KeyTooLong";
      case StatusCode::kEmptyKey: return "EmptyKey";
      case StatusCode::kMalformedName: return "MalformedName";
      case StatusCode::kSealed: return "Sealed";
      case StatusCode::kInjectedCrash: return "InjectedCrash";
    }
    return "Unknown";
  }

 private:
  StatusCode code_;
  std::string msg_;
};

}  // namespace dentrykv

#endif  // DENTRYKV_INCLUDE_STATUS_H_
