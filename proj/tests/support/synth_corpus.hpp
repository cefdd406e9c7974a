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
// Deterministic generator of simple English sentences from a fixed
// template grammar, plus corruption operators. Stands in for large text
// corpora in self-contained tests and benchmarks: every generated word is
// present in the shipped wordlist, so clean sentences carry no
// misspellings, and the templates give an n-gram model sharp word-order
// structure to learn.

#ifndef ACCEPTLM_TESTS_SYNTH_CORPUS_HPP_
#define ACCEPTLM_TESTS_SYNTH_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "acceptlm/spelling.hpp"

namespace acceptlm_tests {

namespace synth {

// Every word the grammar can emit (punctuation excluded).
std::vector<std::string> lexicon();

// One sentence as tokens; 8 to 13 tokens including the final period.
std::vector<std::string> sentence_tokens(std::mt19937_64& rng);

// Space-joined sentences, one per line, at least `min_tokens` in total.
std::vector<std::string> corpus_lines(std::uint64_t seed,
                                      std::size_t min_tokens);

// Swaps two distinct word positions (never the final period).
std::vector<std::string> swap_words(const std::vector<std::string>& tokens,
                                    std::mt19937_64& rng);

// Replaces one alphabetic token with an edit-distance-1 non-word.
std::vector<std::string> inject_misspelling(
    const std::vector<std::string>& tokens, std::mt19937_64& rng,
    const acceptlm::Dictionary& dict);

// Applies `level` corruptions, alternating word swaps and misspellings
// (swap first).
std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 int level, std::mt19937_64& rng,
                                 const acceptlm::Dictionary& dict);

}  // namespace synth

}  // namespace acceptlm_tests

#endif  // ACCEPTLM_TESTS_SYNTH_CORPUS_HPP_
