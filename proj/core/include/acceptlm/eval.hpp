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

#ifndef ACCEPTLM_EVAL_HPP_
#define ACCEPTLM_EVAL_HPP_

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acceptlm/pipeline.hpp"
#include "acceptlm/rated_dataset.hpp"

namespace acceptlm {

// Sample Pearson correlation coefficient. Requires equal lengths >= 3 and
// nonzero variance on both sides; throws std::invalid_argument otherwise
// (never returns NaN).
double pearson(std::span<const double> xs, std::span<const double> ys);

// Per-rater agreement with the crowd mean. Column k of the worker ratings
// is correlated against the worker mean; by default the mean includes the
// worker itself, with a leave-one-out switch. The expert correlation is
// always against the full 5-worker mean.
struct ReliabilityReport {
  std::array<double, 5> worker_r{};
  double expert_r = 0.0;
  std::size_t sample_size = 0;
  bool leave_one_out = false;
};

ReliabilityReport rater_reliability(std::span<const RatedSentence> dataset,
                                    bool leave_one_out = false);

enum class MeasureKind { kScore, kMis, kNormMul, kNormSub, kSlor };

std::string measure_name(MeasureKind m);
std::optional<MeasureKind> measure_from_name(std::string_view name);
std::vector<MeasureKind> all_measures();

struct GridModel {
  std::string name;
  std::shared_ptr<const SentenceScorer> scorer;
  // Sentences shorter than this many tokens are dropped for this model.
  int filter_min_len = 0;
};

struct GridOptions {
  std::vector<double> alphas;
  std::vector<MeasureKind> measures;
  bool correct_spelling = true;
  int threads = 1;
};

struct EvalCell {
  std::string model;
  std::string measure;
  double alpha = 0.0;
  double r = 0.0;
  std::size_t sample_size = 0;
  std::string error;  // non-empty when this cell failed
};

struct EvalReport {
  std::vector<EvalCell> cells;
  // Free-form run configuration echoed into the JSON output so a report
  // can be reproduced from itself.
  std::map<std::string, std::string> config_echo;
  std::map<std::string, std::size_t> degenerate_counts;  // per model

  std::string to_tsv() const;
  std::string to_json() const;
};

// One Pearson r per (model, measure, alpha) cell. A failing cell reports
// its error without aborting the rest of the grid. Deterministic given
// inputs: cells appear in (model, alpha, measure) loop order.
EvalReport run_grid(std::span<const RatedSentence> testset,
                    std::span<const GridModel> models,
                    const GridOptions& options, const UnigramModel& unigram,
                    const Dictionary& dict);

}  // namespace acceptlm

#endif  // ACCEPTLM_EVAL_HPP_
