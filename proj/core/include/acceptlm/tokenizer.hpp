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
// Rule-based tokenizer, frozen by golden tests:
//
//   1. ASCII characters A-Z are lowercased; bytes >= 0x80 pass through
//      untouched (no Unicode normalization).
//   2. The text is split on ASCII whitespace.
//   3. Leading and trailing ASCII punctuation of each chunk is emitted as
//      individual single-character tokens, in textual order.
//   4. Apostrophes inside the remaining core are emitted as their own
//      tokens, splitting the core ("don't" -> don, ', t). Other interior
//      punctuation stays put ("3.5" and "well-known" survive intact).
//
// Tokenization is idempotent on its own space-joined output.

#ifndef ACCEPTLM_TOKENIZER_HPP_
#define ACCEPTLM_TOKENIZER_HPP_

#include <string_view>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

std::vector<Token> tokenize(std::string_view text);

// tokenize() + retain the original text. misspell_count starts at 0.
Sentence make_sentence(std::string_view text);

}  // namespace acceptlm

#endif  // ACCEPTLM_TOKENIZER_HPP_
