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

#include "acceptlm/vocab.hpp"

#include <algorithm>
#include <stdexcept>

namespace acceptlm {

void TokenCounter::add(const Sentence& s) {
  for (const Token& t : s.tokens) {
    add_token(t);
  }
}

void TokenCounter::add_token(std::string_view token) {
  auto it = counts_.find(std::string(token));
  if (it == counts_.end()) {
    counts_.emplace(std::string(token), 1);
  } else {
    ++it->second;
  }
  ++total_;
}

void TokenCounter::merge(const TokenCounter& other) {
  for (const auto& [word, count] : other.counts_) {
    counts_[word] += count;
  }
  total_ += other.total_;
}

std::uint64_t TokenCounter::count(std::string_view token) const {
  auto it = counts_.find(std::string(token));
  return it == counts_.end() ? 0 : it->second;
}

Vocabulary::Vocabulary() {
  words_.emplace_back(kUnkToken);
  index_.emplace(kUnkToken, 0);
}

Vocabulary Vocabulary::from_counter(const TokenCounter& counter,
                                    std::uint64_t min_count) {
  if (min_count < 1) {
    throw std::invalid_argument("min_count must be >= 1");
  }
  std::vector<std::string> kept;
  kept.reserve(counter.counts().size());
  for (const auto& [word, count] : counter.counts()) {
    if (count >= min_count && word != kUnkToken) {
      kept.push_back(word);
    }
  }
  Vocabulary v = from_words(std::move(kept), min_count);
  return v;
}

Vocabulary Vocabulary::from_words(std::vector<std::string> words,
                                  std::uint64_t min_count) {
  Vocabulary v;
  v.min_count_ = min_count;
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  v.words_.reserve(words.size() + 1);
  for (auto& w : words) {
    if (w == kUnkToken) {
      continue;
    }
    v.index_.emplace(w, static_cast<std::uint32_t>(v.words_.size()));
    v.words_.push_back(std::move(w));
  }
  return v;
}

bool Vocabulary::contains(std::string_view w) const {
  return index_.find(std::string(w)) != index_.end();
}

std::uint32_t Vocabulary::id(std::string_view w) const {
  auto it = index_.find(std::string(w));
  return it == index_.end() ? unk_id() : it->second;
}

const std::string& Vocabulary::word(std::uint32_t id) const {
  if (id >= words_.size()) {
    throw std::out_of_range("word id out of range: " + std::to_string(id));
  }
  return words_[id];
}

Vocabulary build_vocab(std::span<const Sentence> corpus,
                       std::uint64_t min_count) {
  TokenCounter counter;
  for (const Sentence& s : corpus) {
    counter.add(s);
  }
  return Vocabulary::from_counter(counter, min_count);
}

Sentence apply_unk(const Sentence& s, const Vocabulary& vocab) {
  Sentence out = s;
  for (Token& t : out.tokens) {
    if (!vocab.contains(t)) {
      t = kUnkToken;
    }
  }
  return out;
}

}  // namespace acceptlm
