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

#ifndef ACCEPTLM_EMBEDDING_HPP_
#define ACCEPTLM_EMBEDDING_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

#include "acceptlm/types.hpp"

namespace acceptlm {

// Word -> dense vector map of one fixed dimension. Lookups of unknown words
// return a Gaussian vector (mean 0, variance 1/d) derived deterministically
// from (word, fallback_seed), so repeated queries agree and distinct words
// land nearly orthogonal at realistic dimensions.
class EmbeddingSpace {
 public:
  EmbeddingSpace(int dimension, std::uint64_t fallback_seed);

  int dimension() const { return dimension_; }
  std::uint64_t fallback_seed() const { return fallback_seed_; }
  std::size_t size() const { return vectors_.size(); }
  bool contains(std::string_view w) const;

  // Throws if the vector's length differs from the space's dimension.
  void insert(std::string word, Vector v);

  // The stored vector, or the deterministic fallback when absent.
  Vector lookup(std::string_view w) const;

 private:
  int dimension_;
  std::uint64_t fallback_seed_;
  std::unordered_map<std::string, Vector> vectors_;
};

// Parses a text embedding table: one entry per line,
// `word v1 v2 ... vd`, single spaces, UTF-8. The dimension is inferred from
// the first entry and enforced afterwards; duplicate words, non-numeric
// fields and dimension mismatches raise errors naming the line number.
EmbeddingSpace load_embeddings(const std::filesystem::path& path,
                               std::uint64_t fallback_seed);

}  // namespace acceptlm

#endif  // ACCEPTLM_EMBEDDING_HPP_
