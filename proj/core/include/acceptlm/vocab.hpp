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

#ifndef ACCEPTLM_VOCAB_HPP_
#define ACCEPTLM_VOCAB_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

// Frequency accumulator for vocabulary construction. Sharding a corpus and
// merging counters in any order yields the same counts.
class TokenCounter {
 public:
  void add(const Sentence& s);
  void add_token(std::string_view token);
  void merge(const TokenCounter& other);
  std::uint64_t count(std::string_view token) const;
  std::uint64_t total() const { return total_; }
  const std::unordered_map<std::string, std::uint64_t>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Immutable word set with dense ids. `<unk>` is always a member, at id 0;
// remaining words get ids in lexicographic order, which makes construction
// deterministic regardless of counting order.
class Vocabulary {
 public:
  Vocabulary();  // only <unk>

  static Vocabulary from_counter(const TokenCounter& counter,
                                 std::uint64_t min_count);
  // Exact word set, plus <unk>; used by deserialization and tests.
  static Vocabulary from_words(std::vector<std::string> words,
                               std::uint64_t min_count = 1);

  bool contains(std::string_view w) const;
  // Dense id of `w`, or unk_id() when absent.
  std::uint32_t id(std::string_view w) const;
  const std::string& word(std::uint32_t id) const;
  std::uint32_t unk_id() const { return 0; }
  std::size_t size() const { return words_.size(); }  // includes <unk>
  std::uint64_t min_count() const { return min_count_; }
  // Iteration in id order; index 0 is <unk>.
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t min_count_ = 1;
};

// Counts `corpus` and keeps types with frequency >= min_count.
Vocabulary build_vocab(std::span<const Sentence> corpus,
                       std::uint64_t min_count);

// Replaces every token absent from `vocab` with <unk>. Length, original
// text and misspell_count are preserved. Idempotent.
Sentence apply_unk(const Sentence& s, const Vocabulary& vocab);

}  // namespace acceptlm

#endif  // ACCEPTLM_VOCAB_HPP_
