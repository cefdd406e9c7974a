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

#include "acceptlm/serialize.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace acceptlm {

namespace {

template <typename T>
void put_le(std::ofstream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get_le(std::ifstream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(buf[i]) << (8 * i);
  }
  return v;
}

}  // namespace

BinaryWriter::BinaryWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
  if (!out_) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
}

void BinaryWriter::write_u8(std::uint8_t v) { put_le(out_, v); }
void BinaryWriter::write_u32(std::uint32_t v) { put_le(out_, v); }
void BinaryWriter::write_u64(std::uint64_t v) { put_le(out_, v); }

void BinaryWriter::write_f64(double v) {
  write_u64(std::bit_cast<std::uint64_t>(v));
}

void BinaryWriter::write_string(std::string_view s) {
  write_u32(static_cast<std::uint32_t>(s.size()));
  out_.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void BinaryWriter::write_magic(ModelKind kind) {
  out_.write(kModelMagic, 4);
  write_u32(kFormatVersion);
  write_u8(static_cast<std::uint8_t>(kind));
}

void BinaryWriter::close() {
  out_.flush();
  if (!out_) {
    throw std::runtime_error("write failed: " + path_.string());
  }
  out_.close();
}

BinaryReader::BinaryReader(const std::filesystem::path& path)
    : in_(path, std::ios::binary), path_(path) {
  if (!in_) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
}

void BinaryReader::fail(const std::string& what) const {
  throw std::runtime_error(what + ": " + path_.string());
}

std::uint8_t BinaryReader::read_u8() {
  auto v = get_le<std::uint8_t>(in_);
  if (!in_) fail("truncated model file");
  return v;
}

std::uint32_t BinaryReader::read_u32() {
  auto v = get_le<std::uint32_t>(in_);
  if (!in_) fail("truncated model file");
  return v;
}

std::uint64_t BinaryReader::read_u64() {
  auto v = get_le<std::uint64_t>(in_);
  if (!in_) fail("truncated model file");
  return v;
}

double BinaryReader::read_f64() { return std::bit_cast<double>(read_u64()); }

std::string BinaryReader::read_string() {
  const std::uint32_t len = read_u32();
  std::string s(len, '\0');
  in_.read(s.data(), static_cast<std::streamsize>(len));
  if (!in_) fail("truncated model file");
  return s;
}

ModelKind BinaryReader::read_magic() {
  char magic[4];
  in_.read(magic, 4);
  if (!in_ || std::memcmp(magic, kModelMagic, 4) != 0) {
    fail("not an ACPT model file");
  }
  const std::uint32_t version = read_u32();
  if (version != kFormatVersion) {
    fail("unsupported model format version " + std::to_string(version));
  }
  return static_cast<ModelKind>(read_u8());
}

void BinaryReader::expect_magic(ModelKind expected) {
  if (read_magic() != expected) {
    fail("model file holds a different model kind");
  }
}

ModelKind peek_model_kind(const std::filesystem::path& path) {
  BinaryReader reader(path);
  return reader.read_magic();
}

}  // namespace acceptlm
