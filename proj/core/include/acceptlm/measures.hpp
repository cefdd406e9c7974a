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
// Acceptability measures derived from a model's raw scores. Raw scores
// (log-probabilities or coherence values) are min-max normalized over the
// evaluated batch into [eps, 1]; the epsilon clamp keeps the exponential
// misspelling penalty away from 0^0 and preserves ordering at the batch
// minimum. Unigram sentence log-probabilities are normalized the same way
// before entering NormMul/NormSub.
//
//   mis      = score^(m + alpha)
//   norm_mul = mis * pu
//   norm_sub = mis - pu
//   slor     = norm_sub / length

#ifndef ACCEPTLM_MEASURES_HPP_
#define ACCEPTLM_MEASURES_HPP_

#include <span>
#include <string>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

inline constexpr double kScoreEpsilon = 1e-9;

struct MeasureConfig {
  double alpha = 0.0;  // >= 0, finite
};

struct ScoreRecord {
  std::string sentence_id;
  double raw_score = 0.0;        // log-prob or coherence
  double norm_score = 0.0;       // in [kScoreEpsilon, 1]
  int misspellings = 0;
  double unigram_logprob = 0.0;
  double unigram_norm = 0.0;     // batch-normalized unigram score
  int length = 0;                // token count
  double mis = 0.0;
  double norm_mul = 0.0;
  double norm_sub = 0.0;
  double slor = 0.0;
};

// Min-max scaling over the batch, clamped to [kScoreEpsilon, 1]. A constant
// batch maps to all ones. Rank order (including ties) is preserved. Throws
// on an empty batch or non-finite input.
std::vector<double> normalize_scores(std::span<const double> raw);

double mis(double norm_score, int misspellings, const MeasureConfig& cfg);
double norm_mul(double mis_value, double unigram_norm);
double norm_sub(double mis_value, double unigram_norm);
double slor(double norm_sub_value, int length);  // throws on length < 1

// Fills the four measures of `records` in place from their norm_score,
// misspellings, unigram_norm and length fields.
void compute_measures(std::vector<ScoreRecord>& records,
                      const MeasureConfig& cfg);

}  // namespace acceptlm

#endif  // ACCEPTLM_MEASURES_HPP_
