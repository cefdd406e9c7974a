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

#include "acceptlm/tokenizer.hpp"

#include <string>

namespace acceptlm {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Locale-independent ASCII punctuation.
bool is_punct(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return (u >= 33 && u <= 47) || (u >= 58 && u <= 64) || (u >= 91 && u <= 96) ||
         (u >= 123 && u <= 126);
}

char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

void emit_core(std::string_view core, std::vector<Token>& out) {
  // Split at apostrophes; each apostrophe becomes its own token.
  std::size_t start = 0;
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (core[i] == '\'') {
      if (i > start) {
        out.emplace_back(core.substr(start, i - start));
      }
      out.emplace_back(1, '\'');
      start = i + 1;
    }
  }
  if (start < core.size()) {
    out.emplace_back(core.substr(start));
  }
}

void emit_chunk(std::string_view chunk, std::vector<Token>& out) {
  std::size_t begin = 0;
  std::size_t end = chunk.size();
  std::vector<Token> trailing;
  while (begin < end && is_punct(chunk[begin])) {
    out.emplace_back(1, chunk[begin]);
    ++begin;
  }
  while (end > begin && is_punct(chunk[end - 1])) {
    trailing.emplace_back(1, chunk[end - 1]);
    --end;
  }
  if (begin < end) {
    emit_core(chunk.substr(begin, end - begin), out);
  }
  // Trailing punctuation was collected right-to-left.
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    out.push_back(std::move(*it));
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::string lowered;
  lowered.reserve(text.size());
  for (char c : text) {
    lowered.push_back(to_lower(c));
  }

  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < lowered.size()) {
    while (i < lowered.size() && is_space(lowered[i])) {
      ++i;
    }
    std::size_t start = i;
    while (i < lowered.size() && !is_space(lowered[i])) {
      ++i;
    }
    if (i > start) {
      emit_chunk(std::string_view(lowered).substr(start, i - start), tokens);
    }
  }
  return tokens;
}

Sentence make_sentence(std::string_view text) {
  Sentence s;
  s.tokens = tokenize(text);
  s.original_text = std::string(text);
  return s;
}

}  // namespace acceptlm
