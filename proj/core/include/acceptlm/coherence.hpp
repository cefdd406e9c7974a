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
// Semantic coherence scores: how well each word fits the rest of its
// sentence, aggregated over positions. Two context constructions:
//
//   * sum: the other words' vectors summed and divided by the sentence
//     length. Order-free. The divisor cancels inside the cosine, so it is
//     kept purely for fidelity to the definition.
//   * holographic: the word is excised; every contiguous chunk of length
//     >= 2 of the remaining sequence is bound into a single vector by
//     circular convolution of its members' environment vectors, each
//     tagged by its position inside the chunk via iterated application of
//     the model's sequence permutation; all chunk vectors are summed and
//     the result normalized. Order-sensitive by construction. A two-word
//     sentence leaves no chunk after excision, giving a zero context and a
//     cosine of 0 at that position.

#ifndef ACCEPTLM_COHERENCE_HPP_
#define ACCEPTLM_COHERENCE_HPP_

#include <cstddef>

#include "acceptlm/embedding.hpp"
#include "acceptlm/holographic.hpp"
#include "acceptlm/types.hpp"

namespace acceptlm {

enum class Aggregation { kMin, kAvg };
enum class ContextMethod { kSum, kHolographic };

// Exactly one of `space` / `model` must be set. With `model`, `level`
// selects the word representation compared against the context: 0 for the
// environment vector, 1..levels for memory vectors. The holographic context
// method requires `model`.
struct CoherenceConfig {
  Aggregation aggregation = Aggregation::kMin;
  ContextMethod context_method = ContextMethod::kSum;
  int level = 0;
  const EmbeddingSpace* space = nullptr;
  const HolographicModel* model = nullptr;
};

// (sum over j != i of vector(w_j)) / n. Requires n >= 2 and 0 <= i < n.
Vector context_sum(const Sentence& s, std::size_t i,
                   const EmbeddingSpace& space);
Vector context_sum(const Sentence& s, std::size_t i,
                   const HolographicModel& model, int level);

// Chunk-sum holographic context; unit length unless no chunk exists.
Vector context_holo(const Sentence& s, std::size_t i,
                    const HolographicModel& model);

// min or avg over positions of cosine(word vector, context vector). Always
// in [-1, 1]. Sentences made of unknown words score via the deterministic
// fallback vectors. Requires n >= 2.
double coherence_score(const Sentence& s, const CoherenceConfig& cfg);

}  // namespace acceptlm

#endif  // ACCEPTLM_COHERENCE_HPP_
