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

#ifndef ACCEPTLM_TYPES_HPP_
#define ACCEPTLM_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace acceptlm {

// A token is a non-empty, already-lowercased string produced by tokenize().
using Token = std::string;

// Reserved symbol substituted for out-of-vocabulary words. Never counted as
// a misspelling and never spell-corrected.
inline constexpr const char* kUnkToken = "<unk>";

// Default seed used by every CLI subcommand unless --seed is given.
inline constexpr std::uint64_t kDefaultSeed = 42;

struct Sentence {
  std::vector<Token> tokens;
  std::string original_text;
  // Number of misspelled tokens; filled in by spelling::count_misspellings.
  int misspell_count = 0;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
};

using Vector = std::vector<double>;

}  // namespace acceptlm

#endif  // ACCEPTLM_TYPES_HPP_
