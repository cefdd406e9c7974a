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

#include "acceptlm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace acceptlm {

std::vector<double> normalize_scores(std::span<const double> raw) {
  if (raw.empty()) {
    throw std::invalid_argument("cannot normalize an empty batch");
  }
  for (double x : raw) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("non-finite score in batch");
    }
  }
  const auto [min_it, max_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *min_it;
  const double hi = *max_it;
  std::vector<double> out(raw.size());
  if (lo == hi) {
    std::fill(out.begin(), out.end(), 1.0);
    return out;
  }
  const double range = hi - lo;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = std::clamp((raw[i] - lo) / range, kScoreEpsilon, 1.0);
  }
  return out;
}

double mis(double norm_score, int misspellings, const MeasureConfig& cfg) {
  if (misspellings < 0) {
    throw std::invalid_argument("misspelling count must be >= 0");
  }
  if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha)) {
    throw std::invalid_argument("alpha must be finite and >= 0");
  }
  return std::pow(norm_score, static_cast<double>(misspellings) + cfg.alpha);
}

double norm_mul(double mis_value, double unigram_norm) {
  return mis_value * unigram_norm;
}

double norm_sub(double mis_value, double unigram_norm) {
  return mis_value - unigram_norm;
}

double slor(double norm_sub_value, int length) {
  if (length < 1) {
    throw std::invalid_argument("slor requires a sentence length >= 1");
  }
  return norm_sub_value / static_cast<double>(length);
}

void compute_measures(std::vector<ScoreRecord>& records,
                      const MeasureConfig& cfg) {
  for (ScoreRecord& r : records) {
    r.mis = mis(r.norm_score, r.misspellings, cfg);
    r.norm_mul = norm_mul(r.mis, r.unigram_norm);
    r.norm_sub = norm_sub(r.mis, r.unigram_norm);
    r.slor = slor(r.norm_sub, r.length);
  }
}

}  // namespace acceptlm
