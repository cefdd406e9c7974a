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

#include "acceptlm/holographic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "acceptlm/rng.hpp"
#include "acceptlm/serialize.hpp"
#include "acceptlm/vector_ops.hpp"
#include "acceptlm/vocab.hpp"

namespace acceptlm {

namespace {

std::uint64_t env_seed(std::uint64_t model_seed, std::string_view word) {
  return rng::mix(rng::mix(model_seed, rng::kTagEnvironment),
                  rng::hash64(word));
}

std::uint64_t role_seed(std::uint64_t model_seed, int distance) {
  return rng::mix(rng::mix(model_seed, rng::kTagRole),
                  static_cast<std::uint64_t>(distance));
}

std::uint64_t perm_seed(std::uint64_t model_seed, int which) {
  return rng::mix(rng::mix(model_seed, rng::kTagPermutation),
                  static_cast<std::uint64_t>(which));
}

}  // namespace

SentenceSource corpus_source(std::span<const Sentence> sentences) {
  return [sentences](const std::function<void(const Sentence&)>& sink) {
    for (const Sentence& s : sentences) {
      sink(s);
    }
  };
}

HolographicModel::HolographicModel(const HolographicConfig& config)
    : config_(config),
      perm_left_(rng::random_permutation(perm_seed(config.seed, 1),
                                         config.dimension)),
      perm_right_(rng::random_permutation(perm_seed(config.seed, 2),
                                          config.dimension)),
      perm_seq_(rng::random_permutation(perm_seed(config.seed, 3),
                                        config.dimension)),
      memory_(static_cast<std::size_t>(config.levels)) {}

bool HolographicModel::has_memory(std::string_view w) const {
  return memory_[0].find(std::string(w)) != memory_[0].end();
}

Vector HolographicModel::environment_vector(std::string_view w) const {
  const int d = config_.dimension;
  return rng::gaussian_vector(env_seed(config_.seed, w), d,
                              1.0 / std::sqrt(static_cast<double>(d)));
}

Vector HolographicModel::memory_vector(std::string_view w, int level) const {
  if (level < 1 || level > config_.levels) {
    throw std::invalid_argument("memory level out of range: " +
                                std::to_string(level));
  }
  const auto& table = memory_[static_cast<std::size_t>(level - 1)];
  auto it = table.find(std::string(w));
  if (it != table.end()) {
    return it->second;
  }
  return environment_vector(w);
}

Vector HolographicModel::word_representation(std::string_view w,
                                             int level) const {
  if (level == 0) {
    return environment_vector(w);
  }
  return memory_vector(w, level);
}

Vector HolographicModel::role_vector(int distance) const {
  if (distance < 1 || distance > config_.window) {
    throw std::invalid_argument("role distance out of range: " +
                                std::to_string(distance));
  }
  const int d = config_.dimension;
  return rng::gaussian_vector(role_seed(config_.seed, distance), d,
                              1.0 / std::sqrt(static_cast<double>(d)));
}

HolographicModel train_holographic(const SentenceSource& corpus,
                                   const HolographicConfig& config) {
  if (config.dimension < 2) {
    throw std::invalid_argument("holographic dimension must be >= 2");
  }
  if (config.levels < 1) {
    throw std::invalid_argument("holographic levels must be >= 1");
  }
  if (config.window < 1) {
    throw std::invalid_argument("holographic window must be >= 1");
  }

  // Pass 0: the modeled word set.
  TokenCounter counter;
  std::uint64_t sentences = 0;
  corpus([&](const Sentence& s) {
    counter.add(s);
    ++sentences;
  });
  if (sentences == 0) {
    throw std::runtime_error("cannot train a holographic model on an empty corpus");
  }
  std::vector<std::string> words;
  for (const auto& [word, count] : counter.counts()) {
    if (count >= config.min_count) {
      words.push_back(word);
    }
  }
  std::sort(words.begin(), words.end());
  std::unordered_map<std::string, std::uint32_t> word_index;
  for (std::uint32_t i = 0; i < words.size(); ++i) {
    word_index.emplace(words[i], i);
  }
  const std::size_t n_words = words.size();

  HolographicModel model(config);
  const int d = config.dimension;
  FreqTransform transform(d);
  const std::size_t spec_size =
      static_cast<std::size_t>(transform.spectrum_size());

  // Role spectra, one per distance.
  std::vector<FreqTransform::Spectrum> role_spec;
  role_spec.reserve(static_cast<std::size_t>(config.window));
  for (int m = 1; m <= config.window; ++m) {
    role_spec.push_back(transform.forward(model.role_vector(m)));
  }

  // Level inputs, updated after each pass.
  std::vector<Vector> inputs(n_words);
  for (std::size_t i = 0; i < n_words; ++i) {
    inputs[i] = model.environment_vector(words[i]);
  }

  for (int level = 1; level <= config.levels; ++level) {
    // Side-tagged spectra of the current inputs.
    std::vector<FreqTransform::Spectrum> left_spec(n_words);
    std::vector<FreqTransform::Spectrum> right_spec(n_words);
    for (std::size_t i = 0; i < n_words; ++i) {
      left_spec[i] = transform.forward(permute(inputs[i], model.perm_left_));
      right_spec[i] = transform.forward(permute(inputs[i], model.perm_right_));
    }

    std::vector<FreqTransform::Spectrum> acc(
        n_words, FreqTransform::Spectrum(spec_size, {0.0, 0.0}));
    FreqTransform::Spectrum contribution(spec_size);

    corpus([&](const Sentence& s) {
      // Modeled words only; rare types are invisible to the pass.
      std::vector<std::uint32_t> ids;
      ids.reserve(s.tokens.size());
      for (const Token& t : s.tokens) {
        auto it = word_index.find(t);
        if (it != word_index.end()) {
          ids.push_back(it->second);
        }
      }
      const int len = static_cast<int>(ids.size());
      for (int t = 0; t < len; ++t) {
        auto& target = acc[ids[static_cast<std::size_t>(t)]];
        for (int p = -config.window; p <= config.window; ++p) {
          const int j = t + p;
          if (p == 0 || j < 0 || j >= len) {
            continue;
          }
          const auto& side =
              p < 0 ? left_spec[ids[static_cast<std::size_t>(j)]]
                    : right_spec[ids[static_cast<std::size_t>(j)]];
          const auto& role =
              role_spec[static_cast<std::size_t>(std::abs(p) - 1)];
          for (std::size_t k = 0; k < spec_size; ++k) {
            target[k] += side[k] * role[k];
          }
        }
      }
    });

    auto& level_memory = model.memory_[static_cast<std::size_t>(level - 1)];
    for (std::size_t i = 0; i < n_words; ++i) {
      Vector mem = transform.inverse(acc[i]);
      if (!normalize(mem)) {
        // No context anywhere in the corpus: keep the identity vector.
        mem = model.environment_vector(words[i]);
        normalize(mem);
      }
      level_memory[words[i]] = mem;
      inputs[i] = std::move(mem);
    }
  }
  return model;
}

void HolographicModel::save(const std::filesystem::path& path) const {
  BinaryWriter writer(path);
  writer.write_magic(ModelKind::kHolographic);
  writer.write_u32(static_cast<std::uint32_t>(config_.dimension));
  writer.write_u32(static_cast<std::uint32_t>(config_.levels));
  writer.write_u32(static_cast<std::uint32_t>(config_.window));
  writer.write_u64(config_.seed);
  writer.write_u64(config_.min_count);

  std::vector<std::string> words;
  words.reserve(memory_[0].size());
  for (const auto& [word, vec] : memory_[0]) {
    words.push_back(word);
  }
  std::sort(words.begin(), words.end());

  writer.write_u64(words.size());
  for (const std::string& w : words) {
    writer.write_string(w);
    for (const auto& level : memory_) {
      const Vector& vec = level.at(w);
      for (double x : vec) {
        writer.write_f64(x);
      }
    }
  }
  writer.close();
}

HolographicModel HolographicModel::load(const std::filesystem::path& path) {
  BinaryReader reader(path);
  reader.expect_magic(ModelKind::kHolographic);
  HolographicConfig config;
  config.dimension = static_cast<int>(reader.read_u32());
  config.levels = static_cast<int>(reader.read_u32());
  config.window = static_cast<int>(reader.read_u32());
  config.seed = reader.read_u64();
  config.min_count = reader.read_u64();
  if (config.dimension < 2 || config.levels < 1 || config.window < 1) {
    throw std::runtime_error("holographic model file has invalid header");
  }

  HolographicModel model(config);
  const std::uint64_t n_words = reader.read_u64();
  for (std::uint64_t i = 0; i < n_words; ++i) {
    std::string word = reader.read_string();
    for (int level = 0; level < config.levels; ++level) {
      Vector vec(static_cast<std::size_t>(config.dimension));
      for (double& x : vec) {
        x = reader.read_f64();
      }
      model.memory_[static_cast<std::size_t>(level)][word] = std::move(vec);
    }
  }
  return model;
}

}  // namespace acceptlm
