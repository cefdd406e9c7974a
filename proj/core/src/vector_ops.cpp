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

#include "acceptlm/vector_ops.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace acceptlm {

namespace {

// FFTW plan creation is not thread-safe; executing a plan on fresh arrays
// via the new-array interface is. Plans are created once per dimension with
// FFTW_UNALIGNED so they can run on any caller buffer.
struct PlanPair {
  fftw_plan forward;
  fftw_plan inverse;
};

PlanPair plans_for(int dim) {
  static std::mutex mutex;
  static std::unordered_map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dim);
  if (it != cache.end()) {
    return it->second;
  }
  std::vector<double> real(static_cast<std::size_t>(dim));
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(dim / 2 + 1));
  PlanPair pair;
  pair.forward = fftw_plan_dft_r2c_1d(
      dim, real.data(), reinterpret_cast<fftw_complex*>(spec.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.inverse = fftw_plan_dft_c2r_1d(
      dim, reinterpret_cast<fftw_complex*>(spec.data()), real.data(),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (pair.forward == nullptr || pair.inverse == nullptr) {
    throw std::runtime_error("fftw plan creation failed for dim " +
                             std::to_string(dim));
  }
  cache.emplace(dim, pair);
  return pair;
}

void check_same_dim(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("vector dimension mismatch: " +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  }
}

}  // namespace

double norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    sum += x * x;
  }
  return std::sqrt(sum);
}

bool normalize(Vector& v) {
  const double n = norm(v);
  if (n == 0.0) {
    return false;
  }
  for (double& x : v) {
    x /= n;
  }
  return true;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  check_same_dim(u, v);
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    return 0.0;
  }
  const double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c);
}

FreqTransform::FreqTransform(int dim) : dim_(dim) {
  if (dim < 1) {
    throw std::invalid_argument("FreqTransform dimension must be >= 1");
  }
  plans_for(dim);  // warm the cache so later calls never plan
}

FreqTransform::Spectrum FreqTransform::forward(
    std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("forward(): wrong input dimension");
  }
  PlanPair plans = plans_for(dim_);
  Spectrum out(static_cast<std::size_t>(spectrum_size()));
  // r2c preserves the input; the const_cast is safe with FFTW_PRESERVE_INPUT
  // semantics of out-of-place r2c transforms.
  fftw_execute_dft_r2c(plans.forward, const_cast<double*>(v.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

Vector FreqTransform::inverse(const Spectrum& s) const {
  if (static_cast<int>(s.size()) != spectrum_size()) {
    throw std::invalid_argument("inverse(): wrong spectrum size");
  }
  PlanPair plans = plans_for(dim_);
  // c2r destroys its input, so transform a copy.
  Spectrum scratch = s;
  Vector out(static_cast<std::size_t>(dim_));
  fftw_execute_dft_c2r(plans.inverse,
                       reinterpret_cast<fftw_complex*>(scratch.data()),
                       out.data());
  const double scale = 1.0 / static_cast<double>(dim_);
  for (double& x : out) {
    x *= scale;
  }
  return out;
}

void FreqTransform::multiply(Spectrum& acc, const Spectrum& s) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i] *= s[i];
  }
}

void FreqTransform::add(Spectrum& acc, const Spectrum& s) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i] += s[i];
  }
}

Vector bind(std::span<const double> u, std::span<const double> v) {
  check_same_dim(u, v);
  const int dim = static_cast<int>(u.size());
  FreqTransform transform(dim);
  auto fu = transform.forward(u);
  const auto fv = transform.forward(v);
  FreqTransform::multiply(fu, fv);
  return transform.inverse(fu);
}

Vector permute(std::span<const double> v,
               std::span<const std::uint32_t> perm) {
  if (v.size() != perm.size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[perm[i]];
  }
  return out;
}

}  // namespace acceptlm
