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
// Multi-level holographic word representations built from circular
// convolution bindings of random environment vectors.
//
// Every word has a fixed environment vector: i.i.d. Gaussian components,
// mean 0, variance 1/d, derived from (word, seed) alone. Level-1 memory of
// word w accumulates, over every occurrence of w, one binding per context
// position p in [-window, window] \ {0}:
//
//     bind(permute(input(context word), side permutation), role_|p|)
//
// where the side permutation distinguishes left from right neighbors and
// role_|p| is a fixed random vector per distance. Level l+1 repeats the
// pass with the normalized level-l memory vectors as the context inputs.
// All memory vectors are normalized to unit length when a level completes;
// a word that never sees any context keeps its normalized environment
// vector instead. Queries for words without a memory vector fall back to
// the environment vector, which doubles as the deterministic random
// embedding for unknown words.

#ifndef ACCEPTLM_HOLOGRAPHIC_HPP_
#define ACCEPTLM_HOLOGRAPHIC_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

// Replayable stream of sentences; training makes one pass per level.
using SentenceSource =
    std::function<void(const std::function<void(const Sentence&)>&)>;

SentenceSource corpus_source(std::span<const Sentence> sentences);

struct HolographicConfig {
  int dimension = 1024;
  int levels = 3;
  int window = 5;
  std::uint64_t seed = kDefaultSeed;
  // Words below this corpus frequency get no memory vector and do not
  // contribute context. 1 models every corpus type.
  std::uint64_t min_count = 1;
};

class HolographicModel {
 public:
  int dimension() const { return config_.dimension; }
  int levels() const { return config_.levels; }
  int window() const { return config_.window; }
  std::uint64_t seed() const { return config_.seed; }
  std::size_t trained_words() const { return memory_[0].size(); }
  bool has_memory(std::string_view w) const;

  // Fixed random identity vector of a word; defined for any string.
  Vector environment_vector(std::string_view w) const;
  // Unit-length learned vector at level in [1, levels]; environment vector
  // when the word was not trained.
  Vector memory_vector(std::string_view w, int level) const;
  // Level 0 selects the environment vector, levels >= 1 the memory vector.
  Vector word_representation(std::string_view w, int level) const;

  Vector role_vector(int distance) const;  // distance in [1, window]
  std::span<const std::uint32_t> left_permutation() const { return perm_left_; }
  std::span<const std::uint32_t> right_permutation() const {
    return perm_right_;
  }
  // Permutation used to tag positions inside sequential chunk bindings.
  std::span<const std::uint32_t> sequence_permutation() const {
    return perm_seq_;
  }

  void save(const std::filesystem::path& path) const;
  static HolographicModel load(const std::filesystem::path& path);

  friend HolographicModel train_holographic(const SentenceSource&,
                                            const HolographicConfig&);

 private:
  explicit HolographicModel(const HolographicConfig& config);

  HolographicConfig config_;
  std::vector<std::uint32_t> perm_left_;
  std::vector<std::uint32_t> perm_right_;
  std::vector<std::uint32_t> perm_seq_;
  // memory_[l - 1]: word -> unit vector at level l.
  std::vector<std::unordered_map<std::string, Vector>> memory_;
};

// Trains on a replayable corpus; two runs with the same seed and corpus
// produce identical models. Throws on an empty corpus or bad config.
HolographicModel train_holographic(const SentenceSource& corpus,
                                   const HolographicConfig& config);

}  // namespace acceptlm

#endif  // ACCEPTLM_HOLOGRAPHIC_HPP_
