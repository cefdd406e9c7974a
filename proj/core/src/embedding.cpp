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

#include "acceptlm/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "acceptlm/rng.hpp"

namespace acceptlm {

EmbeddingSpace::EmbeddingSpace(int dimension, std::uint64_t fallback_seed)
    : dimension_(dimension), fallback_seed_(fallback_seed) {
  if (dimension < 1) {
    throw std::invalid_argument("embedding dimension must be >= 1");
  }
}

bool EmbeddingSpace::contains(std::string_view w) const {
  return vectors_.find(std::string(w)) != vectors_.end();
}

void EmbeddingSpace::insert(std::string word, Vector v) {
  if (static_cast<int>(v.size()) != dimension_) {
    throw std::invalid_argument("embedding for '" + word +
                                "' has wrong dimension");
  }
  vectors_[std::move(word)] = std::move(v);
}

Vector EmbeddingSpace::lookup(std::string_view w) const {
  auto it = vectors_.find(std::string(w));
  if (it != vectors_.end()) {
    return it->second;
  }
  const std::uint64_t seed =
      rng::mix(rng::mix(fallback_seed_, rng::kTagFallback), rng::hash64(w));
  return rng::gaussian_vector(seed, dimension_,
                              1.0 / std::sqrt(static_cast<double>(dimension_)));
}

EmbeddingSpace load_embeddings(const std::filesystem::path& path,
                               std::uint64_t fallback_seed) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open embeddings file: " + path.string());
  }

  auto fail = [&](std::size_t line, const std::string& what) -> void {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                             ": " + what);
  };

  std::string line;
  std::size_t line_no = 0;
  int dimension = -1;
  std::vector<std::pair<std::string, Vector>> entries;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::size_t space = line.find(' ');
    if (space == std::string::npos || space == 0) {
      fail(line_no, "expected 'word v1 v2 ...'");
    }
    std::string word = line.substr(0, space);
    Vector values;
    std::size_t pos = space + 1;
    while (pos < line.size()) {
      std::size_t next = line.find(' ', pos);
      if (next == std::string::npos) {
        next = line.size();
      }
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(line.data() + pos, line.data() + next, value);
      if (ec != std::errc() || ptr != line.data() + next) {
        fail(line_no, "non-numeric field '" + line.substr(pos, next - pos) +
                          "'");
      }
      values.push_back(value);
      pos = next + 1;
    }
    if (values.empty()) {
      fail(line_no, "entry has no vector components");
    }
    if (dimension < 0) {
      dimension = static_cast<int>(values.size());
    } else if (static_cast<int>(values.size()) != dimension) {
      fail(line_no, "dimension " + std::to_string(values.size()) +
                        " does not match first entry's " +
                        std::to_string(dimension));
    }
    entries.emplace_back(std::move(word), std::move(values));
  }
  if (entries.empty()) {
    throw std::runtime_error("embeddings file is empty: " + path.string());
  }

  EmbeddingSpace space(dimension, fallback_seed);
  std::size_t entry_line = 0;
  for (auto& [word, vec] : entries) {
    ++entry_line;
    if (space.contains(word)) {
      throw std::runtime_error(path.string() + ": duplicate word '" + word +
                               "'");
    }
    space.insert(std::move(word), std::move(vec));
  }
  return space;
}

}  // namespace acceptlm
