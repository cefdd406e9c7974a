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

#ifndef ACCEPTLM_RATED_DATASET_HPP_
#define ACCEPTLM_RATED_DATASET_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

// How the gold acceptability score aggregates the ratings. The default uses
// the five crowd ratings only; the alternative averages the expert in too.
enum class GoldAggregation {
  kWorkersOnly,
  kWorkersPlusExpert,
};

struct RatedSentence {
  std::string id;
  Sentence sentence;
  int expert_rating = 0;                   // in [1, 4]
  std::array<int, 5> worker_ratings{};     // each in [1, 4]
  double gold = 0.0;                       // mean rating, in [1, 4]
};

double aggregate_gold(int expert, const std::array<int, 5>& workers,
                      GoldAggregation agg);

// Loads a rated test set from a UTF-8 TSV file with the header line
//
//   id<TAB>sentence<TAB>expert<TAB>r1<TAB>r2<TAB>r3<TAB>r4<TAB>r5
//
// Sentences are tokenized; rows whose token count is below filter_min_len
// are dropped. Malformed rows and out-of-range ratings raise
// std::runtime_error naming the offending line number.
std::vector<RatedSentence> load_rated_dataset(
    const std::filesystem::path& path, int filter_min_len,
    GoldAggregation agg = GoldAggregation::kWorkersOnly);

}  // namespace acceptlm

#endif  // ACCEPTLM_RATED_DATASET_HPP_
