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
// Test-only reference implementation of the interpolated Kneser-Ney model.
// Deliberately brute force and structurally unlike the library: everything
// is keyed on token strings in std::map, probabilities are evaluated by
// top-down recursion, and context totals are recomputed by scanning the
// whole table on every query. Used as the independent oracle the fast
// implementation is checked against.

#ifndef ACCEPTLM_TESTS_KN_ORACLE_HPP_
#define ACCEPTLM_TESTS_KN_ORACLE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

namespace acceptlm_tests {

class KnOracle {
 public:
  // `corpus`: token sequences. `vocab_words`: the word set including
  // "<unk>"; corpus tokens outside it are treated as <unk>.
  KnOracle(const std::vector<std::vector<std::string>>& corpus, int order,
           const std::set<std::string>& vocab_words);

  // `context` holds up to order-1 most recent tokens ("<s>" allowed);
  // shorter contexts are padded with "<s>" on the left.
  double prob(const std::vector<std::string>& context,
              const std::string& word) const;

  double sentence_logprob(const std::vector<std::string>& tokens,
                          bool include_eos = true) const;

  double discount(int level) const { return discounts_.at(level); }

  // All predictable events: vocabulary words plus "</s>".
  const std::set<std::string>& predictable() const { return predictable_; }

 private:
  using Key = std::vector<std::string>;

  double level_prob(int level, const std::vector<std::string>& context,
                    const std::string& word) const;
  std::string map_token(const std::string& token) const;

  int order_;
  std::set<std::string> vocab_;
  std::set<std::string> predictable_;
  // tables_[n]: raw counts at n == order, continuation counts below.
  std::map<int, std::map<Key, long>> tables_;
  std::map<int, double> discounts_;
};

}  // namespace acceptlm_tests

#endif  // ACCEPTLM_TESTS_KN_ORACLE_HPP_
