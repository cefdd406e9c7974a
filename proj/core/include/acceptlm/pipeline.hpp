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
// The scoring pipeline: spell-check, raw model score, unigram score, batch
// normalization, measures. Shared by the score and evaluate commands.

#ifndef ACCEPTLM_PIPELINE_HPP_
#define ACCEPTLM_PIPELINE_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "acceptlm/coherence.hpp"
#include "acceptlm/embedding.hpp"
#include "acceptlm/holographic.hpp"
#include "acceptlm/measures.hpp"
#include "acceptlm/ngram.hpp"
#include "acceptlm/rated_dataset.hpp"
#include "acceptlm/spelling.hpp"

namespace acceptlm {

// A trained model viewed as a sentence -> raw score function.
class SentenceScorer {
 public:
  virtual ~SentenceScorer() = default;
  virtual std::string name() const = 0;
  virtual double score(const Sentence& s) const = 0;
  // True when the model carries no information about any token of `s`;
  // such sentences are still scored, but their count is reported.
  virtual bool degenerate(const Sentence& s) const = 0;
};

class NGramScorer : public SentenceScorer {
 public:
  NGramScorer(std::shared_ptr<const NGramModel> model, std::string name,
              bool include_eos = true);
  std::string name() const override { return name_; }
  double score(const Sentence& s) const override;
  bool degenerate(const Sentence& s) const override;  // every token <unk>

 private:
  std::shared_ptr<const NGramModel> model_;
  std::string name_;
  bool include_eos_;
};

class EmbeddingCoherenceScorer : public SentenceScorer {
 public:
  EmbeddingCoherenceScorer(std::shared_ptr<const EmbeddingSpace> space,
                           std::string name, Aggregation aggregation);
  std::string name() const override { return name_; }
  double score(const Sentence& s) const override;
  bool degenerate(const Sentence& s) const override;  // no stored vectors

 private:
  std::shared_ptr<const EmbeddingSpace> space_;
  std::string name_;
  Aggregation aggregation_;
};

class HolographicCoherenceScorer : public SentenceScorer {
 public:
  HolographicCoherenceScorer(std::shared_ptr<const HolographicModel> model,
                             std::string name, Aggregation aggregation,
                             ContextMethod context_method, int level);
  std::string name() const override { return name_; }
  double score(const Sentence& s) const override;
  bool degenerate(const Sentence& s) const override;  // no trained words

 private:
  std::shared_ptr<const HolographicModel> model_;
  std::string name_;
  CoherenceConfig config_;
};

struct ScoreOptions {
  double alpha = 1.3;
  // Score the spell-corrected text; the misspelling count is taken either
  // way. When false the original tokens are scored.
  bool correct_spelling = true;
  int threads = 1;
};

struct ScoredBatch {
  std::vector<ScoreRecord> records;  // one per input row, input order
  std::size_t degenerate_count = 0;
};

// Coherence scorers give single-token sentences a raw score of 0 (no
// context exists) and count them degenerate; nothing is dropped.
ScoredBatch score_batch(std::span<const RatedSentence> rows,
                        const SentenceScorer& scorer,
                        const UnigramModel& unigram, const Dictionary& dict,
                        const ScoreOptions& options);

// Serializes records as the score TSV (id, raw, score, m, mis, norm_mul,
// norm_sub, slor), with a header row.
std::string score_records_tsv(std::span<const ScoreRecord> records);

}  // namespace acceptlm

#endif  // ACCEPTLM_PIPELINE_HPP_
