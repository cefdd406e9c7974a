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
// Deterministic random primitives. Everything here is a pure function of its
// seed: we avoid std::normal_distribution and friends because their output
// sequences are implementation-defined, whereas mt19937_64 itself is fully
// specified. All embedding fallbacks, environment vectors, role vectors and
// permutations derive from these helpers, which is what makes end-to-end
// runs reproducible byte for byte.

#ifndef ACCEPTLM_RNG_HPP_
#define ACCEPTLM_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {
namespace rng {

// FNV-1a over the bytes of `s`.
std::uint64_t hash64(std::string_view s);

// splitmix64-style combiner; mix(a, b) != mix(b, a) in general.
std::uint64_t mix(std::uint64_t a, std::uint64_t b);

// Stream namespaces so that e.g. environment vectors and fallback vectors of
// the same word never share a generator state.
inline constexpr std::uint64_t kTagFallback = 0x66616c6c6261636bULL;  // "fallback"
inline constexpr std::uint64_t kTagEnvironment = 0x656e7669726f6e00ULL;
inline constexpr std::uint64_t kTagRole = 0x726f6c6500000000ULL;
inline constexpr std::uint64_t kTagPermutation = 0x7065726d00000000ULL;

// Standard-normal stream via Box-Muller on top of mt19937_64, so the exact
// sequence is pinned by the seed alone.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Vector of `dim` i.i.d. Gaussian components, mean 0, standard deviation
// `stddev`. gaussian_vector(seed, d, 1/sqrt(d)) has expected unit norm.
Vector gaussian_vector(std::uint64_t seed, int dim, double stddev);

// Fisher-Yates permutation of [0, n) driven by mt19937_64.
std::vector<std::uint32_t> random_permutation(std::uint64_t seed, int n);

}  // namespace rng
}  // namespace acceptlm

#endif  // ACCEPTLM_RNG_HPP_
