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

#include "support/kn_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace acceptlm_tests {

namespace {

constexpr const char* kBos = "<s>";
constexpr const char* kEos = "</s>";
constexpr const char* kUnk = "<unk>";

}  // namespace

std::string KnOracle::map_token(const std::string& token) const {
  return vocab_.count(token) != 0 ? token : kUnk;
}

KnOracle::KnOracle(const std::vector<std::vector<std::string>>& corpus,
                   int order, const std::set<std::string>& vocab_words)
    : order_(order), vocab_(vocab_words) {
  vocab_.insert(kUnk);
  predictable_ = vocab_;
  predictable_.insert(kEos);

  // Raw counts for every n up to the order, windows ending at a real token
  // or the end marker.
  std::map<int, std::map<Key, long>> raw;
  for (const auto& sentence : corpus) {
    std::vector<std::string> padded;
    for (int i = 0; i < order_ - 1; ++i) {
      padded.push_back(kBos);
    }
    for (const auto& token : sentence) {
      padded.push_back(map_token(token));
    }
    padded.push_back(kEos);
    for (std::size_t end = static_cast<std::size_t>(order_ - 1);
         end < padded.size(); ++end) {
      for (int n = 1; n <= order_; ++n) {
        Key key(padded.begin() + static_cast<long>(end) - (n - 1),
                padded.begin() + static_cast<long>(end) + 1);
        ++raw[n][key];
      }
    }
  }

  // Top level keeps raw counts; each lower level counts distinct
  // predecessor types from the raw table one order up.
  tables_[order_] = raw[order_];
  for (int n = order_ - 1; n >= 1; --n) {
    for (const auto& [key, count] : raw[n + 1]) {
      Key suffix(key.begin() + 1, key.end());
      tables_[n][suffix] += 1;
    }
  }

  // D = n1 / (n1 + 2 n2), clamped to [1e-3, 0.999]; 0.5 when undefined.
  for (int n = 1; n <= order_; ++n) {
    long n1 = 0, n2 = 0;
    for (const auto& [key, count] : tables_[n]) {
      if (count == 1) ++n1;
      if (count == 2) ++n2;
    }
    double d = 0.5;
    if (n1 + 2 * n2 > 0) {
      d = static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
      d = std::min(std::max(d, 1e-3), 0.999);
    }
    discounts_[n] = d;
  }
}

double KnOracle::level_prob(int level,
                            const std::vector<std::string>& context,
                            const std::string& word) const {
  if (level == 0) {
    return 1.0 / static_cast<double>(predictable_.size());
  }
  // The level-n context is the most recent n-1 tokens.
  std::vector<std::string> ctx(
      context.end() - (level - 1), context.end());
  const double lower = level_prob(level - 1, ctx, word);

  const auto& table = tables_.at(level);
  // Brute-force context statistics: scan the whole table.
  double total = 0.0;
  double distinct = 0.0;
  long count = 0;
  for (const auto& [key, c] : table) {
    if (static_cast<int>(key.size()) != level) continue;
    if (!std::equal(ctx.begin(), ctx.end(), key.begin())) continue;
    total += static_cast<double>(c);
    distinct += 1.0;
    if (key.back() == word) {
      count = c;
    }
  }
  if (total == 0.0) {
    return lower;
  }
  const double d = discounts_.at(level);
  return std::max(static_cast<double>(count) - d, 0.0) / total +
         d * distinct / total * lower;
}

double KnOracle::prob(const std::vector<std::string>& context,
                      const std::string& word) const {
  if (predictable_.count(word) == 0) {
    throw std::invalid_argument("oracle: word is not predictable: " + word);
  }
  std::vector<std::string> ctx = context;
  while (static_cast<int>(ctx.size()) < order_ - 1) {
    ctx.insert(ctx.begin(), kBos);
  }
  if (static_cast<int>(ctx.size()) > order_ - 1) {
    ctx.erase(ctx.begin(),
              ctx.end() - (order_ - 1));
  }
  return level_prob(order_, ctx, word);
}

double KnOracle::sentence_logprob(const std::vector<std::string>& tokens,
                                  bool include_eos) const {
  std::vector<std::string> history;
  double sum = 0.0;
  for (const auto& token : tokens) {
    const std::string mapped = map_token(token);
    sum += std::log(prob(history, mapped));
    history.push_back(mapped);
  }
  if (include_eos) {
    sum += std::log(prob(history, kEos));
  }
  return sum;
}

}  // namespace acceptlm_tests
