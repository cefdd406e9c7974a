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
// Interpolated Kneser-Ney n-gram language model with one discount per
// order, plus the plain unigram model used for word-frequency
// normalization.
//
// Smoothing scheme, fixed here and mirrored by the hand-computable oracle
// in the test suite:
//
//   * Sentences are padded with order-1 begin markers and one end marker;
//     counted n-gram windows are those ending at a real token or the end
//     marker, for every n up to the order.
//   * The top level uses raw counts; every lower level uses continuation
//     counts N1+(. g) = number of distinct predecessor types of g.
//   * Each level n interpolates with the level below:
//       P_n(w|c) = max(cnt(c w) - D_n, 0) / total(c)
//                  + D_n * distinct(c) / total(c) * P_{n-1}(w|c')
//     where c' drops the oldest word and the level-0 base is the uniform
//     distribution over vocabulary + end marker.
//   * D_n = n1 / (n1 + 2 n2) from the count-of-counts of the level's own
//     table, clamped to [1e-3, 0.999]; 0.5 when the level has no singleton
//     or doubleton types at all. The clamp keeps every conditional
//     distribution strictly positive, so sentence log-probabilities are
//     always finite.

#ifndef ACCEPTLM_NGRAM_HPP_
#define ACCEPTLM_NGRAM_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "acceptlm/types.hpp"
#include "acceptlm/vocab.hpp"

namespace acceptlm {

inline constexpr int kMaxNGramOrder = 8;
inline constexpr double kDefaultUnkFloor = 1e-4;

namespace detail {

struct Gram {
  std::uint8_t len = 0;
  std::array<std::uint32_t, kMaxNGramOrder> ids{};

  bool operator==(const Gram& o) const {
    if (len != o.len) return false;
    for (std::uint8_t i = 0; i < len; ++i) {
      if (ids[i] != o.ids[i]) return false;
    }
    return true;
  }
  bool operator<(const Gram& o) const;
};

struct GramHash {
  std::size_t operator()(const Gram& g) const;
};

struct ContextStat {
  std::uint64_t total = 0;    // sum of counts over extensions
  std::uint32_t distinct = 0; // number of distinct extensions
};

using CountTable = std::unordered_map<Gram, std::uint32_t, GramHash>;
using ContextTable = std::unordered_map<Gram, ContextStat, GramHash>;

}  // namespace detail

class NGramModel {
 public:
  class Trainer {
   public:
    Trainer(int order, Vocabulary vocab);
    void add(const Sentence& s);
    // Overrides the estimated discounts; one value per order, each in
    // (0, 1). Exposed for experiments and for pinning discounts in tests.
    void set_fixed_discounts(std::vector<double> discounts);
    NGramModel finish() &&;

   private:
    int order_;
    Vocabulary vocab_;
    std::uint64_t sentences_ = 0;
    std::vector<detail::CountTable> raw_;  // index n, 1..order
    std::optional<std::vector<double>> fixed_discounts_;
  };

  int order() const { return order_; }
  const Vocabulary& vocab() const { return vocab_; }
  std::uint32_t eos_id() const;
  std::uint32_t bos_id() const;
  // Words + end marker: the event set every conditional distribution
  // normalizes over.
  std::uint32_t predictable_size() const;

  // Token ids for a sentence; out-of-vocabulary tokens map to <unk>.
  std::vector<std::uint32_t> encode(const Sentence& s) const;

  // P(word | context); `context` supplies the most recent order-1 ids
  // (shorter spans are treated as sentence-initial history). `word` must be
  // a word id or eos_id(). Strictly positive.
  double conditional_prob(std::span<const std::uint32_t> context,
                          std::uint32_t word) const;

  // Natural-log sentence probability, summed over every token and, unless
  // disabled, the end marker.
  double log_prob(const Sentence& s, bool include_eos = true) const;

  double discount(int n) const { return discounts_.at(static_cast<std::size_t>(n)); }
  // Number of distinct n-grams in the level-n table (continuation types for
  // n < order, raw types at the top).
  std::uint64_t table_size(int n) const;

  void save(const std::filesystem::path& path) const;
  static NGramModel load(const std::filesystem::path& path);

 private:
  friend class Trainer;
  void rebuild_context_stats();

  int order_ = 0;
  Vocabulary vocab_;
  // tables_[n]: continuation counts for n < order, raw counts for n = order.
  std::vector<detail::CountTable> tables_;
  std::vector<detail::ContextTable> context_stats_;
  std::vector<double> discounts_;  // index n, 1..order
};

// exp(- total logprob / predicted token count) over a corpus; end markers
// are predicted events. Throws on an empty corpus.
double perplexity(const NGramModel& model, std::span<const Sentence> corpus,
                  bool include_eos = true);

// Maximum-likelihood unigram model over a vocabulary, with <unk> treated as
// an ordinary word that accumulates the counts of everything it replaced.
// Types the corpus never realized share a fixed floor mass so that
// log-probabilities stay finite:
//   seen:   P(w) = count(w)/total * (1 - floor)   [floor omitted when all
//   unseen: P(w) = floor / |unseen|                vocabulary types occur]
class UnigramModel {
 public:
  class Trainer {
   public:
    explicit Trainer(Vocabulary vocab);
    void add(const Sentence& s);
    UnigramModel finish(double unk_floor = kDefaultUnkFloor) &&;

   private:
    Vocabulary vocab_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
  };

  const Vocabulary& vocab() const { return vocab_; }
  double unk_floor() const { return unk_floor_; }
  double log_prob_word(std::string_view w) const;
  // Sum of per-word log-probabilities; no end marker.
  double log_prob(const Sentence& s) const;

  void save(const std::filesystem::path& path) const;
  static UnigramModel load(const std::filesystem::path& path);

 private:
  void compute_log_probs();

  Vocabulary vocab_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  double unk_floor_ = kDefaultUnkFloor;
  std::vector<double> log_probs_;
};

}  // namespace acceptlm

#endif  // ACCEPTLM_NGRAM_HPP_
