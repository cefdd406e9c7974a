// Copyright 2026 The acceptlm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Versioned binary model container. Layout:
//
//   magic   "ACPT" (4 bytes)
//   u32     format version
//   u8      model kind
//   ...     kind-specific payload
//
// All integers little-endian; floating point stored as IEEE-754 bit
// patterns. Writers emit table entries in sorted order so that a
// save/load/save round trip is bit-exact.

#ifndef ACCEPTLM_SERIALIZE_HPP_
#define ACCEPTLM_SERIALIZE_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

namespace acceptlm {

inline constexpr char kModelMagic[4] = {'A', 'C', 'P', 'T'};
inline constexpr std::uint32_t kFormatVersion = 1;

enum class ModelKind : std::uint8_t {
  kNGram = 1,
  kHolographic = 2,
  kUnigram = 3,
};

class BinaryWriter {
 public:
  explicit BinaryWriter(const std::filesystem::path& path);

  void write_u8(std::uint8_t v);
  void write_u32(std::uint32_t v);
  void write_u64(std::uint64_t v);
  void write_f64(double v);
  void write_string(std::string_view s);  // u32 length + bytes
  void write_magic(ModelKind kind);

  // Flushes and throws if any stream operation failed.
  void close();

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::filesystem::path& path);

  std::uint8_t read_u8();
  std::uint32_t read_u32();
  std::uint64_t read_u64();
  double read_f64();
  std::string read_string();

  // Validates magic + version and returns the stored model kind.
  ModelKind read_magic();
  // Validates magic + version and requires `expected`; throws otherwise.
  void expect_magic(ModelKind expected);

 private:
  std::ifstream in_;
  std::filesystem::path path_;
  void fail(const std::string& what) const;
};

// Reads only the model kind byte; used by the CLI to dispatch on file type.
ModelKind peek_model_kind(const std::filesystem::path& path);

}  // namespace acceptlm

#endif  // ACCEPTLM_SERIALIZE_HPP_
