// Copyright (c) 2026 The DentryKV Authors. All rights reserved.
// Use of this source code is governed by a BSD-style license that can be
// found in the LICENSE file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "core/key_codec.h"
#include "core/record.h"
#include "test_util.h"
#include "util/coding.h"
#include "util/crc32c.h"

using namespace dentrykv;

TEST_CASE("crc32c known vectors") {
  // The classic Castagnoli check value.
  CHECK(crc32c::Value("123456789") == 0xE3069283u);
  CHECK(crc32c::Value("") == 0u);
  // From RFC 3720 appendix: 32 bytes of zeros.
  std::string zeros(32, '\0');
  CHECK(crc32c::Value(zeros) == 0x8A9136AAu);
  std::string ones(32, '\xff');
  CHECK(crc32c::Value(ones) == 0x62A8AB43u);
}

TEST_CASE("crc32c extend matches one-shot") {
  auto rng = test::Rng(7);
  for (int round = 0; round < 50; round++) {
    std::string data = test::RandomValue(rng, 200);
    uint32_t whole = crc32c::Value(data);
    for (size_t split = 0; split <= data.size(); split += 13) {
      uint32_t part = crc32c::Extend(0, data.data(), split);
      part = crc32c::Extend(part, data.data() + split, data.size() - split);
      CHECK(part == whole);
    }
  }
}

TEST_CASE("crc32c detects any single-bit flip") {
  std::string data = "the quick brown fox";
  uint32_t good = crc32c::Value(data);
  for (size_t i = 0; i < data.size(); i++) {
    for (int bit = 0; bit < 8; bit++) {
      std::string bad = data;
      bad[i] = static_cast<char>(bad[i] ^ (1 << bit));
      CHECK(crc32c::Value(bad) != good);
    }
  }
}

TEST_CASE("fixed-width coding round-trips") {
  std::string buf;
  PutFixed32(&buf, 0xDEADBEEFu);
  PutFixed64(&buf, 0x0123456789ABCDEFull);
  CHECK(buf.size() == 12);
  // Little endian byte order.
  CHECK(static_cast<unsigned char>(buf[0]) == 0xEF);
  CHECK(static_cast<unsigned char>(buf[3]) == 0xDE);
  CHECK(DecodeFixed32(buf.data()) == 0xDEADBEEFu);
  CHECK(DecodeFixed64(buf.data() + 4) == 0x0123456789ABCDEFull);
}

// Key codec.

TEST_CASE("safe keys pass through unchanged") {
  for (const char* key : {"abc", "user_1", "A-B+C=D@E", "0123456789"}) {
    std::string name;
    REQUIRE(EncodeKey(key, &name).ok());
    CHECK(name == key);
    std::string back;
    REQUIRE(DecodeKey(name, &back).ok());
    CHECK(back == key);
  }
}

TEST_CASE("unsafe bytes escape as uppercase hex") {
  std::string name;
  REQUIRE(EncodeKey("a/b", &name).ok());
  CHECK(name == "a%2Fb");
  REQUIRE(EncodeKey(".hidden", &name).ok());
  CHECK(name == "%2Ehidden");
  REQUIRE(EncodeKey("%", &name).ok());
  CHECK(name == "%25");
  REQUIRE(EncodeKey(std::string_view("\x00\xff", 2), &name).ok());
  CHECK(name == "%00%FF");
  REQUIRE(EncodeKey("a b", &name).ok());
  CHECK(name == "a%20b");
}

TEST_CASE("encoded names never start with a dot") {
  // "." and ".." and ".meta" must be impossible outputs.
  std::string name;
  REQUIRE(EncodeKey(".", &name).ok());
  CHECK(name == "%2E");
  REQUIRE(EncodeKey("..", &name).ok());
  CHECK(name == "%2E%2E");
  REQUIRE(EncodeKey(".meta", &name).ok());
  CHECK(name == "%2Emeta");
  std::string back;
  CHECK(DecodeKey(".meta", &back).code() == StatusCode::kMalformedName);
  CHECK(DecodeKey(".", &back).code() == StatusCode::kMalformedName);
}

TEST_CASE("key limits") {
  std::string name;
  CHECK(EncodeKey("", &name).code() == StatusCode::kEmptyKey);

  // 255 safe bytes fit exactly; 256 do not.
  std::string longest(255, 'k');
  CHECK(EncodeKey(longest, &name).ok());
  CHECK(name.size() == 255);
  std::string too_long(256, 'k');
  Status s = EncodeKey(too_long, &name);
  CHECK(s.code() == StatusCode::kKeyTooLong);
  // The error carries the offending key.
  CHECK(s.ToString().find(too_long) != std::string::npos);

  // Escaping triples unsafe bytes: 86 slashes encode to 258 > 255.
  std::string slashes(86, '/');
  CHECK(EncodeKey(slashes, &name).code() == StatusCode::kKeyTooLong);
  CHECK(EncodeKey(std::string(85, '/'), &name).ok());
}

TEST_CASE("decode rejects malformed names") {
  std::string key;
  // Truncated escapes.
  CHECK(DecodeKey("%", &key).code() == StatusCode::kMalformedName);
  CHECK(DecodeKey("abc%2", &key).code() == StatusCode::kMalformedName);
  // Bad hex digits, including lowercase.
  CHECK(DecodeKey("%ZZ", &key).code() == StatusCode::kMalformedName);
  CHECK(DecodeKey("%2f", &key).code() == StatusCode::kMalformedName);
  CHECK(DecodeKey("%g0", &key).code() == StatusCode::kMalformedName);
  // Unescaped unsafe byte.
  CHECK(DecodeKey("a/b", &key).code() == StatusCode::kMalformedName);
  CHECK(DecodeKey("a b", &key).code() == StatusCode::kMalformedName);
  // Empty name.
  CHECK(DecodeKey("", &key).code() == StatusCode::kMalformedName);
  // Valid escape still decodes.
  REQUIRE(DecodeKey("a%2Fb", &key).ok());
  CHECK(key == "a/b");
}

TEST_CASE("codec round-trips and stays injective") {
  auto rng = test::Rng(42);
  std::map<std::string, std::string> name_to_key;
  for (int i = 0; i < 100000; i++) {
    std::string key = test::RandomKey(rng);
    std::string name;
    REQUIRE(EncodeKey(key, &name).ok());
    CHECK(name.size() <= kMaxEncodedKey);
    CHECK(name[0] != '.');
    std::string back;
    REQUIRE(DecodeKey(name, &back).ok());
    CHECK(back == key);
    auto [it, inserted] = name_to_key.emplace(name, key);
    if (!inserted) CHECK(it->second == key);
  }
}

TEST_CASE("CompareKeys orders by raw bytes") {
  CHECK(CompareKeys("a", "b") < 0);
  CHECK(CompareKeys("a", "a") == 0);
  CHECK(CompareKeys("ab", "a") > 0);
  CHECK(CompareKeys("a\xff", "ab") > 0);  // unsigned comparison
  // Encoded-name order and key order disagree; sorting must use raw keys.
  std::string a, b;
  REQUIRE(EncodeKey("a/b", &a).ok());  // "a%2Fb"
  REQUIRE(EncodeKey("a0b", &b).ok());  // "a0b"
  CHECK(CompareKeys("a/b", "a0b") < 0);
  CHECK(a.compare(b) < 0);  // here they agree by luck of '%' < '0'
  std::string c, d;
  REQUIRE(EncodeKey("aAb", &c).ok());
  REQUIRE(EncodeKey("a+b", &d).ok());  // '+' is safe, 0x2B < 'A' 0x41
  CHECK(CompareKeys("a+b", "aAb") < 0);
  CHECK(c == "aAb");
  CHECK(d == "a+b");
}

// KV record wire format.

TEST_CASE("put record encodes to 18 bytes for a 1-byte value") {
  KvRecord rec{1, OpCode::kPut, "v"};
  CHECK(EncodedRecordSize(rec) == 18);
  std::string buf;
  AppendRecord(&buf, rec);
  REQUIRE(buf.size() == 18);

  // Layout: seq u64 | op u8 | value_len u32 | value | crc32c, all LE.
  std::string expected;
  PutFixed64(&expected, 1);
  expected.push_back(0);  // kPut
  PutFixed32(&expected, 1);
  expected.push_back('v');
  PutFixed32(&expected, crc32c::Value(expected));
  CHECK(buf == expected);
}

TEST_CASE("delete record encodes to 17 bytes") {
  KvRecord rec{9, OpCode::kDelete, ""};
  CHECK(EncodedRecordSize(rec) == 17);
  std::string buf;
  AppendRecord(&buf, rec);
  REQUIRE(buf.size() == 17);
  std::string expected;
  PutFixed64(&expected, 9);
  expected.push_back(1);  // kDelete
  PutFixed32(&expected, 0);
  PutFixed32(&expected, crc32c::Value(expected));
  CHECK(buf == expected);
}

TEST_CASE("record lists round-trip") {
  auto rng = test::Rng(3);
  std::vector<KvRecord> records;
  std::string buf;
  uint64_t seq = 1;
  for (int i = 0; i < 200; i++) {
    bool del = rng() % 4 == 0;
    KvRecord rec{seq, del ? OpCode::kDelete : OpCode::kPut,
                 del ? "" : test::RandomValue(rng)};
    seq += 1 + rng() % 3;
    AppendRecord(&buf, rec);
    records.push_back(rec);
  }
  std::vector<KvRecord> decoded;
  REQUIRE(DecodeRecords(buf, &decoded).ok());
  CHECK(decoded == records);
}

TEST_CASE("any single-byte corruption is caught") {
  std::string buf;
  AppendRecord(&buf, {1, OpCode::kPut, "v"});
  REQUIRE(buf.size() == 18);
  for (size_t i = 0; i < buf.size(); i++) {
    for (int bit = 0; bit < 8; bit++) {
      std::string bad = buf;
      bad[i] = static_cast<char>(bad[i] ^ (1 << bit));
      std::vector<KvRecord> decoded;
      Status s = DecodeRecords(bad, &decoded);
      // Either the crc catches it, or the header became structurally
      // invalid; both are Corruption.
      CHECK(s.IsCorruption());
    }
  }
}

TEST_CASE("decode reports the valid prefix") {
  std::string buf;
  AppendRecord(&buf, {1, OpCode::kPut, "first"});
  size_t first_end = buf.size();
  AppendRecord(&buf, {2, OpCode::kPut, "second"});

  // Truncate at every offset inside the second record.
  for (size_t cut = first_end + 1; cut < buf.size(); cut++) {
    std::vector<KvRecord> decoded;
    size_t valid = 0;
    Status s = DecodeRecords(buf.substr(0, cut), &decoded, &valid);
    CHECK(s.IsCorruption());
    CHECK(valid == first_end);
    REQUIRE(decoded.size() == 1);
    CHECK(decoded[0].value == "first");
  }

  std::vector<KvRecord> decoded;
  size_t valid = 0;
  REQUIRE(DecodeRecords(buf, &decoded, &valid).ok());
  CHECK(valid == buf.size());
  CHECK(decoded.size() == 2);
}

TEST_CASE("structurally invalid records are rejected") {
  // op byte 2 with a correct crc.
  std::string buf;
  PutFixed64(&buf, 5);
  buf.push_back(2);
  PutFixed32(&buf, 0);
  PutFixed32(&buf, crc32c::Value(buf));
  std::vector<KvRecord> decoded;
  CHECK(DecodeRecords(buf, &decoded).IsCorruption());

  // Delete carrying a value.
  buf.clear();
  PutFixed64(&buf, 5);
  buf.push_back(1);
  PutFixed32(&buf, 1);
  buf.push_back('x');
  PutFixed32(&buf, crc32c::Value(buf));
  decoded.clear();
  CHECK(DecodeRecords(buf, &decoded).IsCorruption());
}
