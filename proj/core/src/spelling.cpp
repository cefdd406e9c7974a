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

#include "acceptlm/spelling.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace acceptlm {

namespace {

bool is_alpha_ascii(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

std::string lower_ascii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

}  // namespace

Dictionary Dictionary::from_words(
    std::vector<std::string> words,
    std::unordered_map<std::string, std::uint64_t> frequencies) {
  if (words.empty()) {
    throw std::invalid_argument("dictionary must not be empty");
  }
  Dictionary dict;
  for (std::string& w : words) {
    w = lower_ascii(std::move(w));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  dict.index_.insert(words.begin(), words.end());
  dict.words_ = std::move(words);
  for (auto& [word, count] : frequencies) {
    dict.frequencies_[lower_ascii(word)] = count;
  }
  return dict;
}

Dictionary Dictionary::load(
    const std::filesystem::path& wordlist,
    const std::optional<std::filesystem::path>& frequencies) {
  std::ifstream in(wordlist);
  if (!in) {
    throw std::runtime_error("cannot open wordlist: " + wordlist.string());
  }
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      words.push_back(line);
    }
  }

  std::unordered_map<std::string, std::uint64_t> freq;
  if (frequencies) {
    std::ifstream fin(*frequencies);
    if (!fin) {
      throw std::runtime_error("cannot open frequency file: " +
                               frequencies->string());
    }
    std::size_t line_no = 0;
    while (std::getline(fin, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) continue;
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        throw std::runtime_error(frequencies->string() + ":" +
                                 std::to_string(line_no) +
                                 ": expected 'word<TAB>count'");
      }
      try {
        freq[line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
      } catch (const std::exception&) {
        throw std::runtime_error(frequencies->string() + ":" +
                                 std::to_string(line_no) +
                                 ": count is not an integer");
      }
    }
  }
  return from_words(std::move(words), std::move(freq));
}

bool Dictionary::contains(std::string_view w) const {
  return index_.find(std::string(w)) != index_.end();
}

std::uint64_t Dictionary::frequency(std::string_view w) const {
  auto it = frequencies_.find(std::string(w));
  return it == frequencies_.end() ? 0 : it->second;
}

int bounded_edit_distance(std::string_view a, std::string_view b,
                          int max_distance) {
  const int overflow = max_distance + 1;
  const int la = static_cast<int>(a.size());
  const int lb = static_cast<int>(b.size());
  if (std::abs(la - lb) > max_distance) {
    return overflow;
  }
  // Three-row DP; the transposition case needs the row before last.
  std::vector<int> prev2(static_cast<std::size_t>(lb) + 1);
  std::vector<int> prev(static_cast<std::size_t>(lb) + 1);
  std::vector<int> curr(static_cast<std::size_t>(lb) + 1);
  for (int j = 0; j <= lb; ++j) {
    prev[static_cast<std::size_t>(j)] = j;
  }
  for (int i = 1; i <= la; ++i) {
    curr[0] = i;
    int row_min = curr[0];
    for (int j = 1; j <= lb; ++j) {
      const int sub_cost = a[static_cast<std::size_t>(i - 1)] ==
                                   b[static_cast<std::size_t>(j - 1)]
                               ? 0
                               : 1;
      int d = std::min({prev[static_cast<std::size_t>(j)] + 1,
                        curr[static_cast<std::size_t>(j - 1)] + 1,
                        prev[static_cast<std::size_t>(j - 1)] + sub_cost});
      if (i > 1 && j > 1 &&
          a[static_cast<std::size_t>(i - 1)] ==
              b[static_cast<std::size_t>(j - 2)] &&
          a[static_cast<std::size_t>(i - 2)] ==
              b[static_cast<std::size_t>(j - 1)]) {
        d = std::min(d, prev2[static_cast<std::size_t>(j - 2)] + 1);
      }
      curr[static_cast<std::size_t>(j)] = d;
      row_min = std::min(row_min, d);
    }
    if (row_min > max_distance) {
      return overflow;
    }
    std::swap(prev2, prev);
    std::swap(prev, curr);
  }
  const int result = prev[static_cast<std::size_t>(lb)];
  return result > max_distance ? overflow : result;
}

bool is_misspelled(const Token& t, const Dictionary& dict) {
  return t != kUnkToken && is_alpha_ascii(t) && !dict.contains(t);
}

Token correct(const Token& t, const Dictionary& dict) {
  constexpr int kMaxDistance = 2;
  int best_distance = kMaxDistance + 1;
  std::uint64_t best_frequency = 0;
  const std::string* best = nullptr;
  for (const std::string& candidate : dict.words()) {
    const int d = bounded_edit_distance(t, candidate, kMaxDistance);
    if (d > kMaxDistance) {
      continue;
    }
    const std::uint64_t f = dict.frequency(candidate);
    // words() is sorted, so same (distance, frequency) keeps the earlier,
    // lexicographically smaller candidate.
    if (d < best_distance || (d == best_distance && f > best_frequency)) {
      best_distance = d;
      best_frequency = f;
      best = &candidate;
    }
  }
  return best == nullptr ? t : *best;
}

SpellCheckResult count_misspellings(const Sentence& s, const Dictionary& dict) {
  SpellCheckResult result;
  result.corrected = s;
  for (Token& t : result.corrected.tokens) {
    if (is_misspelled(t, dict)) {
      ++result.misspellings;
      t = correct(t, dict);
    }
  }
  result.corrected.misspell_count = result.misspellings;
  return result;
}

}  // namespace acceptlm
