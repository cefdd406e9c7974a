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

#include "support/synth_corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace acceptlm_tests {
namespace synth {

namespace {

const std::vector<std::string>& determiners() {
  static const std::vector<std::string> v = {"the", "a", "every", "this"};
  return v;
}

const std::vector<std::string>& adjectives() {
  static const std::vector<std::string> v = {
      "old",   "young", "small", "big",  "quiet",  "bright", "happy",
      "tired", "gentle", "clever", "busy", "slow",  "tall",   "warm",
      "cold",  "green", "red",   "little", "hungry", "careful"};
  return v;
}

const std::vector<std::string>& animate_nouns() {
  static const std::vector<std::string> v = {
      "man",     "woman",   "child",  "dog",      "cat",   "bird",
      "horse",   "farmer",  "teacher", "student", "doctor", "neighbor",
      "friend",  "girl",    "boy"};
  return v;
}

const std::vector<std::string>& thing_nouns() {
  static const std::vector<std::string> v = {
      "river",  "garden", "house",  "tree",   "road",   "village", "market",
      "kitchen", "window", "door",  "mountain", "field", "forest", "city",
      "street", "book",   "letter", "song",   "story",  "table",  "chair",
      "boat",   "train",  "school", "church", "bridge", "lamp",   "basket",
      "flower", "stone",  "clock",  "bell"};
  return v;
}

const std::vector<std::string>& intransitive_verbs() {
  static const std::vector<std::string> v = {
      "sleeps", "waits", "smiles", "laughs", "runs",
      "walks",  "sings", "dreams", "rests",  "listens"};
  return v;
}

const std::vector<std::string>& transitive_verbs() {
  static const std::vector<std::string> v = {
      "sees",   "finds",     "follows", "helps",  "watches", "carries",
      "likes",  "meets",     "greets",  "visits", "remembers", "teaches",
      "feeds",  "calls",     "thanks",  "hears",  "knows",   "paints",
      "draws",  "builds",    "opens",   "closes", "reads",   "holds",
      "brings"};
  return v;
}

const std::vector<std::string>& adverbs() {
  static const std::vector<std::string> v = {
      "quickly", "slowly",    "quietly", "often",   "never", "always",
      "sometimes", "carefully", "happily", "gently", "soon",  "today",
      "again"};
  return v;
}

const std::vector<std::string>& prepositions() {
  static const std::vector<std::string> v = {
      "in",     "on",      "near", "behind", "under",
      "beside", "across",  "through", "past", "toward"};
  return v;
}

const std::vector<std::string>& clause_conjunctions() {
  static const std::vector<std::string> v = {"while", "when", "before",
                                             "after", "because"};
  return v;
}

const std::string& pick(const std::vector<std::string>& bank,
                        std::mt19937_64& rng) {
  return bank[rng() % bank.size()];
}

// D [ADJ] N
void noun_phrase(std::vector<std::string>& out, std::mt19937_64& rng,
                 const std::vector<std::string>& nouns, bool force_adj) {
  out.push_back(pick(determiners(), rng));
  if (force_adj || rng() % 2 == 0) {
    out.push_back(pick(adjectives(), rng));
  }
  out.push_back(pick(nouns, rng));
}

}  // namespace

std::vector<std::string> lexicon() {
  std::set<std::string> all;
  for (const auto* bank :
       {&determiners(), &adjectives(), &animate_nouns(), &thing_nouns(),
        &intransitive_verbs(), &transitive_verbs(), &adverbs(),
        &prepositions(), &clause_conjunctions()}) {
    all.insert(bank->begin(), bank->end());
  }
  all.insert("and");
  all.insert("of");
  return {all.begin(), all.end()};
}

std::vector<std::string> sentence_tokens(std::mt19937_64& rng) {
  std::vector<std::string> out;
  switch (rng() % 6) {
    case 0:
      // the old farmer watches a bird near the river .
      noun_phrase(out, rng, animate_nouns(), true);
      out.push_back(pick(transitive_verbs(), rng));
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(prepositions(), rng));
      noun_phrase(out, rng, thing_nouns(), false);
      break;
    case 1:
      // a young girl sings happily in the green garden .
      noun_phrase(out, rng, animate_nouns(), true);
      out.push_back(pick(intransitive_verbs(), rng));
      out.push_back(pick(adverbs(), rng));
      out.push_back(pick(prepositions(), rng));
      noun_phrase(out, rng, thing_nouns(), true);
      break;
    case 2:
      // the teacher reads a book while the child sleeps quietly .
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(transitive_verbs(), rng));
      noun_phrase(out, rng, thing_nouns(), false);
      out.push_back(pick(clause_conjunctions(), rng));
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(intransitive_verbs(), rng));
      out.push_back(pick(adverbs(), rng));
      break;
    case 3:
      // when the bird sings , the cat watches the window .
      out.push_back(pick(clause_conjunctions(), rng));
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(intransitive_verbs(), rng));
      out.push_back(",");
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(transitive_verbs(), rng));
      noun_phrase(out, rng, thing_nouns(), false);
      break;
    case 4:
      // the friend of the village waits quietly and smiles .
      out.push_back("the");
      out.push_back(pick(animate_nouns(), rng));
      out.push_back("of");
      noun_phrase(out, rng, thing_nouns(), false);
      out.push_back(pick(intransitive_verbs(), rng));
      out.push_back(pick(adverbs(), rng));
      out.push_back("and");
      out.push_back(pick(intransitive_verbs(), rng));
      break;
    default:
      // the doctor often visits the old school and the small church .
      noun_phrase(out, rng, animate_nouns(), false);
      out.push_back(pick(adverbs(), rng));
      out.push_back(pick(transitive_verbs(), rng));
      noun_phrase(out, rng, thing_nouns(), true);
      out.push_back("and");
      noun_phrase(out, rng, thing_nouns(), true);
      break;
  }
  out.push_back(".");
  return out;
}

std::vector<std::string> corpus_lines(std::uint64_t seed,
                                      std::size_t min_tokens) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> lines;
  std::size_t tokens = 0;
  while (tokens < min_tokens) {
    const auto sent = sentence_tokens(rng);
    tokens += sent.size();
    std::string line;
    for (std::size_t i = 0; i < sent.size(); ++i) {
      if (i > 0) line += ' ';
      line += sent[i];
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

namespace {

bool is_word(const std::string& token) {
  for (char c : token) {
    if (c < 'a' || c > 'z') return false;
  }
  return !token.empty();
}

std::size_t pick_word_position(const std::vector<std::string>& tokens,
                               std::mt19937_64& rng, std::size_t min_len) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::size_t i = rng() % tokens.size();
    if (is_word(tokens[i]) && tokens[i].size() >= min_len) {
      return i;
    }
  }
  throw std::runtime_error("no corruptible token found");
}

}  // namespace

std::vector<std::string> swap_words(const std::vector<std::string>& tokens,
                                    std::mt19937_64& rng) {
  std::vector<std::string> out = tokens;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::size_t i = pick_word_position(out, rng, 1);
    const std::size_t j = pick_word_position(out, rng, 1);
    if (i != j && out[i] != out[j]) {
      std::swap(out[i], out[j]);
      return out;
    }
  }
  throw std::runtime_error("could not find two distinct words to swap");
}

std::vector<std::string> inject_misspelling(
    const std::vector<std::string>& tokens, std::mt19937_64& rng,
    const acceptlm::Dictionary& dict) {
  std::vector<std::string> out = tokens;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const std::size_t i = pick_word_position(out, rng, 3);
    std::string word = out[i];
    const char letter = static_cast<char>('a' + rng() % 26);
    const std::size_t pos = rng() % word.size();
    switch (rng() % 4) {
      case 0:  // substitute
        word[pos] = letter;
        break;
      case 1:  // insert
        word.insert(word.begin() + static_cast<long>(pos), letter);
        break;
      case 2:  // delete
        word.erase(word.begin() + static_cast<long>(pos));
        break;
      default:  // transpose adjacent
        if (pos + 1 < word.size()) {
          std::swap(word[pos], word[pos + 1]);
        } else {
          word[pos] = letter;
        }
        break;
    }
    if (word != out[i] && !word.empty() && !dict.contains(word)) {
      out[i] = word;
      return out;
    }
  }
  throw std::runtime_error("could not inject a misspelling");
}

std::vector<std::string> corrupt(const std::vector<std::string>& tokens,
                                 int level, std::mt19937_64& rng,
                                 const acceptlm::Dictionary& dict) {
  std::vector<std::string> out = tokens;
  for (int k = 0; k < level; ++k) {
    out = (k % 2 == 0) ? swap_words(out, rng)
                       : inject_misspelling(out, rng, dict);
  }
  return out;
}

}  // namespace synth
}  // namespace acceptlm_tests
