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

#include "acceptlm/rng.hpp"

#include <cmath>
#include <numbers>

namespace acceptlm {
namespace rng {

std::uint64_t hash64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms; +1 keeps u1 strictly positive for the log.
  const double u1 =
      static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Vector gaussian_vector(std::uint64_t seed, int dim, double stddev) {
  GaussianStream stream(seed);
  Vector v(static_cast<std::size_t>(dim));
  for (double& x : v) {
    x = stddev * stream.next();
  }
  return v;
}

std::vector<std::uint32_t> random_permutation(std::uint64_t seed, int n) {
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
  }
  std::mt19937_64 engine(seed);
  for (int i = n - 1; i > 0; --i) {
    // Unbiased bounded draw by rejection; engine output range is [0, 2^64).
    const std::uint64_t bound = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine();
    } while (r >= limit);
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(r % bound)]);
  }
  return perm;
}

}  // namespace rng
}  // namespace acceptlm
