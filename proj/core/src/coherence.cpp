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

#include "acceptlm/coherence.hpp"

#include <functional>
#include <stdexcept>

#include "acceptlm/vector_ops.hpp"

namespace acceptlm {

namespace {

void check_position(const Sentence& s, std::size_t i) {
  if (s.tokens.size() < 2) {
    throw std::invalid_argument(
        "context is undefined for sentences of fewer than 2 tokens");
  }
  if (i >= s.tokens.size()) {
    throw std::invalid_argument("context position out of range");
  }
}

using Lookup = std::function<Vector(std::string_view)>;

Vector context_sum_impl(const Sentence& s, std::size_t i, int dimension,
                        const Lookup& lookup) {
  check_position(s, i);
  Vector sum(static_cast<std::size_t>(dimension), 0.0);
  for (std::size_t j = 0; j < s.tokens.size(); ++j) {
    if (j == i) continue;
    const Vector v = lookup(s.tokens[j]);
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] += v[k];
    }
  }
  const double divisor = static_cast<double>(s.tokens.size());
  for (double& x : sum) {
    x /= divisor;
  }
  return sum;
}

}  // namespace

Vector context_sum(const Sentence& s, std::size_t i,
                   const EmbeddingSpace& space) {
  return context_sum_impl(s, i, space.dimension(),
                          [&](std::string_view w) { return space.lookup(w); });
}

Vector context_sum(const Sentence& s, std::size_t i,
                   const HolographicModel& model, int level) {
  return context_sum_impl(s, i, model.dimension(), [&](std::string_view w) {
    return model.word_representation(w, level);
  });
}

Vector context_holo(const Sentence& s, std::size_t i,
                    const HolographicModel& model) {
  check_position(s, i);
  const int d = model.dimension();

  std::vector<std::string_view> rest;
  rest.reserve(s.tokens.size() - 1);
  for (std::size_t j = 0; j < s.tokens.size(); ++j) {
    if (j != i) rest.push_back(s.tokens[j]);
  }
  const std::size_t m = rest.size();
  if (m < 2) {
    return Vector(static_cast<std::size_t>(d), 0.0);
  }

  FreqTransform transform(d);
  const auto seq_perm = model.sequence_permutation();

  // tagged[a][j - 1]: spectrum of the a-th remaining word's environment
  // vector permuted j times; j is the word's position inside a chunk, which
  // never exceeds a + 1.
  std::vector<std::vector<FreqTransform::Spectrum>> tagged(m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector v = model.environment_vector(rest[a]);
    tagged[a].reserve(a + 1);
    for (std::size_t j = 1; j <= a + 1; ++j) {
      v = permute(v, seq_perm);
      tagged[a].push_back(transform.forward(v));
    }
  }

  FreqTransform::Spectrum chunk_sum(
      static_cast<std::size_t>(transform.spectrum_size()), {0.0, 0.0});
  for (std::size_t start = 0; start + 1 < m; ++start) {
    FreqTransform::Spectrum acc = tagged[start][0];
    for (std::size_t len = 2; start + len <= m; ++len) {
      const std::size_t a = start + len - 1;
      FreqTransform::multiply(acc, tagged[a][len - 1]);
      FreqTransform::add(chunk_sum, acc);
    }
  }

  Vector context = transform.inverse(chunk_sum);
  normalize(context);
  return context;
}

double coherence_score(const Sentence& s, const CoherenceConfig& cfg) {
  if (s.tokens.size() < 2) {
    throw std::invalid_argument(
        "coherence requires a sentence of at least 2 tokens");
  }
  if ((cfg.space == nullptr) == (cfg.model == nullptr)) {
    throw std::invalid_argument(
        "coherence config must set exactly one vector source");
  }
  if (cfg.context_method == ContextMethod::kHolographic &&
      cfg.model == nullptr) {
    throw std::invalid_argument(
        "holographic context requires a holographic model");
  }

  const std::size_t n = s.tokens.size();
  double min_score = 2.0;
  double sum_score = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Vector word_vec = cfg.space != nullptr
                          ? cfg.space->lookup(s.tokens[i])
                          : cfg.model->word_representation(s.tokens[i],
                                                           cfg.level);
    Vector ctx;
    if (cfg.context_method == ContextMethod::kSum) {
      ctx = cfg.space != nullptr
                ? context_sum(s, i, *cfg.space)
                : context_sum(s, i, *cfg.model, cfg.level);
    } else {
      ctx = context_holo(s, i, *cfg.model);
    }
    const double c = cosine(word_vec, ctx);
    min_score = std::min(min_score, c);
    sum_score += c;
  }
  return cfg.aggregation == Aggregation::kMin
             ? min_score
             : sum_score / static_cast<double>(n);
}

}  // namespace acceptlm
