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

#include "acceptlm/pipeline.hpp"

#include <cstdio>
#include <stdexcept>
#include <thread>

namespace acceptlm {

namespace {

// Deterministic parallel map: blocks of indices, results written in place.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i) {
          body(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

NGramScorer::NGramScorer(std::shared_ptr<const NGramModel> model,
                         std::string name, bool include_eos)
    : model_(std::move(model)), name_(std::move(name)),
      include_eos_(include_eos) {}

double NGramScorer::score(const Sentence& s) const {
  return model_->log_prob(s, include_eos_);
}

bool NGramScorer::degenerate(const Sentence& s) const {
  for (const Token& t : s.tokens) {
    if (t != kUnkToken && model_->vocab().contains(t)) {
      return false;
    }
  }
  return true;
}

EmbeddingCoherenceScorer::EmbeddingCoherenceScorer(
    std::shared_ptr<const EmbeddingSpace> space, std::string name,
    Aggregation aggregation)
    : space_(std::move(space)), name_(std::move(name)),
      aggregation_(aggregation) {}

double EmbeddingCoherenceScorer::score(const Sentence& s) const {
  if (s.tokens.size() < 2) {
    return 0.0;
  }
  CoherenceConfig cfg;
  cfg.aggregation = aggregation_;
  cfg.context_method = ContextMethod::kSum;
  cfg.space = space_.get();
  return coherence_score(s, cfg);
}

bool EmbeddingCoherenceScorer::degenerate(const Sentence& s) const {
  if (s.tokens.size() < 2) {
    return true;
  }
  for (const Token& t : s.tokens) {
    if (space_->contains(t)) {
      return false;
    }
  }
  return true;
}

HolographicCoherenceScorer::HolographicCoherenceScorer(
    std::shared_ptr<const HolographicModel> model, std::string name,
    Aggregation aggregation, ContextMethod context_method, int level)
    : model_(std::move(model)), name_(std::move(name)) {
  config_.aggregation = aggregation;
  config_.context_method = context_method;
  config_.level = level;
  config_.model = model_.get();
}

double HolographicCoherenceScorer::score(const Sentence& s) const {
  if (s.tokens.size() < 2) {
    return 0.0;
  }
  return coherence_score(s, config_);
}

bool HolographicCoherenceScorer::degenerate(const Sentence& s) const {
  if (s.tokens.size() < 2) {
    return true;
  }
  for (const Token& t : s.tokens) {
    if (model_->has_memory(t)) {
      return false;
    }
  }
  return true;
}

ScoredBatch score_batch(std::span<const RatedSentence> rows,
                        const SentenceScorer& scorer,
                        const UnigramModel& unigram, const Dictionary& dict,
                        const ScoreOptions& options) {
  if (rows.empty()) {
    throw std::invalid_argument("cannot score an empty batch");
  }
  ScoredBatch batch;
  batch.records.resize(rows.size());
  std::vector<double> raw(rows.size());
  std::vector<double> uni(rows.size());
  std::vector<unsigned char> degenerate(rows.size(), 0);

  parallel_for(rows.size(), options.threads, [&](std::size_t i) {
    const RatedSentence& row = rows[i];
    const SpellCheckResult checked = count_misspellings(row.sentence, dict);
    const Sentence& to_score =
        options.correct_spelling ? checked.corrected : row.sentence;

    ScoreRecord& rec = batch.records[i];
    rec.sentence_id = row.id;
    rec.misspellings = checked.misspellings;
    rec.length = static_cast<int>(row.sentence.tokens.size());
    raw[i] = scorer.score(to_score);
    uni[i] = unigram.log_prob(to_score);
    degenerate[i] = scorer.degenerate(to_score) ? 1 : 0;
  });

  const std::vector<double> norm = normalize_scores(raw);
  const std::vector<double> uni_norm = normalize_scores(uni);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ScoreRecord& rec = batch.records[i];
    rec.raw_score = raw[i];
    rec.norm_score = norm[i];
    rec.unigram_logprob = uni[i];
    rec.unigram_norm = uni_norm[i];
    batch.degenerate_count += degenerate[i];
  }
  MeasureConfig cfg;
  cfg.alpha = options.alpha;
  compute_measures(batch.records, cfg);
  return batch;
}

std::string score_records_tsv(std::span<const ScoreRecord> records) {
  std::string out = "id\traw\tscore\tm\tmis\tnorm_mul\tnorm_sub\tslor\n";
  for (const ScoreRecord& r : records) {
    out += r.sentence_id;
    out += '\t';
    out += format_double(r.raw_score);
    out += '\t';
    out += format_double(r.norm_score);
    out += '\t';
    out += std::to_string(r.misspellings);
    out += '\t';
    out += format_double(r.mis);
    out += '\t';
    out += format_double(r.norm_mul);
    out += '\t';
    out += format_double(r.norm_sub);
    out += '\t';
    out += format_double(r.slor);
    out += '\n';
  }
  return out;
}

}  // namespace acceptlm
