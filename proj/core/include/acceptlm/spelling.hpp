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
// Dictionary-based misspelling detection and correction. A token is
// misspelled iff it is purely alphabetic (ASCII a-z), absent from the
// dictionary and not the <unk> symbol; anything containing digits,
// punctuation or non-ASCII bytes is exempt. Corrections pick the
// dictionary word within restricted Damerau-Levenshtein distance <= 2
// (substitution, insertion, deletion, adjacent transposition), ranked by
// smallest distance, then highest frequency, then lexicographic order;
// tokens with no candidate are returned unchanged.

#ifndef ACCEPTLM_SPELLING_HPP_
#define ACCEPTLM_SPELLING_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

class Dictionary {
 public:
  // Wordlist: UTF-8, one word per line; entries are lowercased on load.
  // The optional frequency file has lines `word<TAB>count`.
  static Dictionary load(
      const std::filesystem::path& wordlist,
      const std::optional<std::filesystem::path>& frequencies = std::nullopt);
  static Dictionary from_words(
      std::vector<std::string> words,
      std::unordered_map<std::string, std::uint64_t> frequencies = {});

  bool contains(std::string_view w) const;
  std::uint64_t frequency(std::string_view w) const;  // 0 when unranked
  std::size_t size() const { return words_.size(); }
  // Lexicographically sorted entries; candidate scans iterate this, which
  // makes tie-breaking order-independent of load order.
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_set<std::string> index_;
  std::unordered_map<std::string, std::uint64_t> frequencies_;
};

// Restricted Damerau-Levenshtein (optimal string alignment) distance,
// capped: returns max_distance + 1 as soon as the true distance exceeds
// max_distance.
int bounded_edit_distance(std::string_view a, std::string_view b,
                          int max_distance);

bool is_misspelled(const Token& t, const Dictionary& dict);

// Best correction per the ranking above; requires is_misspelled(t).
Token correct(const Token& t, const Dictionary& dict);

struct SpellCheckResult {
  Sentence corrected;
  int misspellings = 0;
};

// Counts misspelled tokens and replaces each with its correction. The
// returned sentence carries the count in misspell_count.
SpellCheckResult count_misspellings(const Sentence& s, const Dictionary& dict);

}  // namespace acceptlm

#endif  // ACCEPTLM_SPELLING_HPP_
