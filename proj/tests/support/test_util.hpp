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

#ifndef ACCEPTLM_TESTS_TEST_UTIL_HPP_
#define ACCEPTLM_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "acceptlm/tokenizer.hpp"
#include "acceptlm/types.hpp"

namespace acceptlm_tests {

// Self-deleting unique temp directory.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("acceptlm_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<acceptlm::Sentence> sentences_from_lines(
    std::span<const std::string> lines) {
  std::vector<acceptlm::Sentence> out;
  out.reserve(lines.size());
  for (const auto& line : lines) {
    out.push_back(acceptlm::make_sentence(line));
  }
  return out;
}

// O(d^2) circular convolution, the reference for the FFT-backed bind.
inline acceptlm::Vector direct_circular_convolution(
    std::span<const double> u, std::span<const double> v) {
  const std::size_t d = u.size();
  acceptlm::Vector out(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      sum += u[j] * v[(k + d - j) % d];
    }
    out[k] = sum;
  }
  return out;
}

inline std::filesystem::path data_dir() {
  return std::filesystem::path(ACCEPTLM_DATA_DIR);
}

}  // namespace acceptlm_tests

#endif  // ACCEPTLM_TESTS_TEST_UTIL_HPP_
