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

#ifndef ACCEPTLM_VECTOR_OPS_HPP_
#define ACCEPTLM_VECTOR_OPS_HPP_

#include <complex>
#include <span>
#include <vector>

#include "acceptlm/types.hpp"

namespace acceptlm {

// Cosine similarity in [-1, 1]. By convention returns 0 when either vector
// is all-zero. Throws std::invalid_argument on dimension mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

// Circular convolution, out[k] = sum_j u[j] * v[(k - j) mod d]. The binding
// operation of holographic representations: dimension-preserving,
// commutative and associative. Computed via FFT; see tests for the O(d^2)
// reference it is checked against. Throws on dimension mismatch.
Vector bind(std::span<const double> u, std::span<const double> v);

double norm(std::span<const double> v);

// Normalizes to unit length in place; leaves an all-zero vector untouched
// and returns false in that case.
bool normalize(Vector& v);

// Frequency-domain workspace for repeated circular convolutions at one
// dimension. Binding chains and chunk sums factor into elementwise complex
// products there, which is what makes contextual n-gram sums tractable.
// Thread-safe for concurrent forward()/inverse() calls; plan construction
// is internally serialized.
class FreqTransform {
 public:
  using Spectrum = std::vector<std::complex<double>>;

  explicit FreqTransform(int dim);

  int dim() const { return dim_; }
  int spectrum_size() const { return dim_ / 2 + 1; }

  Spectrum forward(std::span<const double> v) const;
  Vector inverse(const Spectrum& s) const;  // includes the 1/d scaling

  // Elementwise product accumulate: acc[i] *= s[i] / acc[i] += s[i].
  static void multiply(Spectrum& acc, const Spectrum& s);
  static void add(Spectrum& acc, const Spectrum& s);

 private:
  int dim_;
};

// Applies an index permutation: out[i] = v[perm[i]].
Vector permute(std::span<const double> v, std::span<const std::uint32_t> perm);

}  // namespace acceptlm

#endif  // ACCEPTLM_VECTOR_OPS_HPP_
