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

#include "acceptlm/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "acceptlm/serialize.hpp"

namespace acceptlm {

namespace detail {

bool Gram::operator<(const Gram& o) const {
  if (len != o.len) return len < o.len;
  for (std::uint8_t i = 0; i < len; ++i) {
    if (ids[i] != o.ids[i]) return ids[i] < o.ids[i];
  }
  return false;
}

std::size_t GramHash::operator()(const Gram& g) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ g.len;
  for (std::uint8_t i = 0; i < g.len; ++i) {
    h ^= g.ids[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace {

Gram make_gram(std::span<const std::uint32_t> ids) {
  Gram g;
  g.len = static_cast<std::uint8_t>(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    g.ids[i] = ids[i];
  }
  return g;
}

Gram drop_first(const Gram& g) {
  Gram out;
  out.len = static_cast<std::uint8_t>(g.len - 1);
  for (std::uint8_t i = 1; i < g.len; ++i) {
    out.ids[i - 1] = g.ids[i];
  }
  return out;
}

Gram drop_last(const Gram& g) {
  Gram out = g;
  out.len = static_cast<std::uint8_t>(g.len - 1);
  out.ids[out.len] = 0;
  return out;
}

Gram extend(const Gram& ctx, std::uint32_t word) {
  Gram out = ctx;
  out.ids[out.len] = word;
  out.len = static_cast<std::uint8_t>(out.len + 1);
  return out;
}

// D = n1 / (n1 + 2 n2) over the table's count-of-counts, clamped so every
// level keeps some interpolation mass and stays below 1.
double estimate_discount(const CountTable& table) {
  std::uint64_t n1 = 0, n2 = 0;
  for (const auto& [gram, count] : table) {
    if (count == 1) ++n1;
    else if (count == 2) ++n2;
  }
  if (n1 + 2 * n2 == 0) {
    return 0.5;
  }
  const double d =
      static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
  return std::clamp(d, 1e-3, 0.999);
}

}  // namespace

}  // namespace detail

using detail::Gram;

NGramModel::Trainer::Trainer(int order, Vocabulary vocab)
    : order_(order), vocab_(std::move(vocab)) {
  if (order < 1 || order > kMaxNGramOrder) {
    throw std::invalid_argument("ngram order must be in [1, " +
                                std::to_string(kMaxNGramOrder) + "]");
  }
  raw_.resize(static_cast<std::size_t>(order) + 1);
}

void NGramModel::Trainer::add(const Sentence& s) {
  const std::uint32_t eos = static_cast<std::uint32_t>(vocab_.size());
  const std::uint32_t bos = eos + 1;

  std::vector<std::uint32_t> padded;
  padded.reserve(static_cast<std::size_t>(order_) + s.tokens.size());
  for (int i = 0; i < order_ - 1; ++i) {
    padded.push_back(bos);
  }
  for (const Token& t : s.tokens) {
    padded.push_back(vocab_.id(t));
  }
  padded.push_back(eos);

  for (std::size_t i = static_cast<std::size_t>(order_ - 1);
       i < padded.size(); ++i) {
    for (int n = 1; n <= order_; ++n) {
      const auto gram = detail::make_gram(
          std::span(padded).subspan(i + 1 - static_cast<std::size_t>(n),
                                    static_cast<std::size_t>(n)));
      ++raw_[static_cast<std::size_t>(n)][gram];
    }
  }
  ++sentences_;
}

void NGramModel::Trainer::set_fixed_discounts(std::vector<double> discounts) {
  if (static_cast<int>(discounts.size()) != order_) {
    throw std::invalid_argument("need one discount per order");
  }
  for (double d : discounts) {
    if (!(d > 0.0 && d < 1.0)) {
      throw std::invalid_argument("discounts must lie in (0, 1)");
    }
  }
  fixed_discounts_ = std::move(discounts);
}

NGramModel NGramModel::Trainer::finish() && {
  if (sentences_ == 0) {
    throw std::runtime_error("cannot train an n-gram model on an empty corpus");
  }
  NGramModel model;
  model.order_ = order_;
  model.vocab_ = std::move(vocab_);
  model.tables_.resize(static_cast<std::size_t>(order_) + 1);
  model.tables_[static_cast<std::size_t>(order_)] =
      std::move(raw_[static_cast<std::size_t>(order_)]);

  // Continuation counts: the number of distinct predecessor types of each
  // lower-order n-gram, derived from the raw table one order up.
  for (int n = order_ - 1; n >= 1; --n) {
    auto& cont = model.tables_[static_cast<std::size_t>(n)];
    for (const auto& [gram, count] : raw_[static_cast<std::size_t>(n) + 1]) {
      ++cont[detail::drop_first(gram)];
    }
  }
  raw_.clear();

  model.discounts_.assign(static_cast<std::size_t>(order_) + 1, 0.0);
  for (int n = 1; n <= order_; ++n) {
    model.discounts_[static_cast<std::size_t>(n)] =
        fixed_discounts_ ? (*fixed_discounts_)[static_cast<std::size_t>(n - 1)]
                         : detail::estimate_discount(
                               model.tables_[static_cast<std::size_t>(n)]);
  }
  model.rebuild_context_stats();
  return model;
}

std::uint32_t NGramModel::eos_id() const {
  return static_cast<std::uint32_t>(vocab_.size());
}

std::uint32_t NGramModel::bos_id() const { return eos_id() + 1; }

std::uint32_t NGramModel::predictable_size() const {
  return static_cast<std::uint32_t>(vocab_.size()) + 1;
}

std::vector<std::uint32_t> NGramModel::encode(const Sentence& s) const {
  std::vector<std::uint32_t> ids;
  ids.reserve(s.tokens.size());
  for (const Token& t : s.tokens) {
    ids.push_back(vocab_.id(t));
  }
  return ids;
}

void NGramModel::rebuild_context_stats() {
  context_stats_.assign(static_cast<std::size_t>(order_) + 1, {});
  for (int n = 1; n <= order_; ++n) {
    auto& stats = context_stats_[static_cast<std::size_t>(n)];
    for (const auto& [gram, count] : tables_[static_cast<std::size_t>(n)]) {
      auto& stat = stats[detail::drop_last(gram)];
      stat.total += count;
      stat.distinct += 1;
    }
  }
}

double NGramModel::conditional_prob(std::span<const std::uint32_t> context,
                                    std::uint32_t word) const {
  if (word >= predictable_size()) {
    throw std::invalid_argument("word id out of the predictable range");
  }
  // Effective history of exactly order-1 ids, bos-padded on the left.
  std::array<std::uint32_t, kMaxNGramOrder> history;
  const int hist_len = order_ - 1;
  {
    const std::size_t have = context.size();
    for (int i = 0; i < hist_len; ++i) {
      const int from_end = hist_len - i;
      history[static_cast<std::size_t>(i)] =
          static_cast<std::size_t>(from_end) <= have
              ? context[have - static_cast<std::size_t>(from_end)]
              : bos_id();
    }
  }

  double p = 1.0 / static_cast<double>(predictable_size());
  for (int n = 1; n <= order_; ++n) {
    const int ctx_len = n - 1;
    Gram ctx;
    ctx.len = static_cast<std::uint8_t>(ctx_len);
    for (int i = 0; i < ctx_len; ++i) {
      ctx.ids[static_cast<std::size_t>(i)] =
          history[static_cast<std::size_t>(hist_len - ctx_len + i)];
    }
    const auto& stats = context_stats_[static_cast<std::size_t>(n)];
    const auto stat_it = stats.find(ctx);
    if (stat_it == stats.end() || stat_it->second.total == 0) {
      continue;  // unseen context at this level: keep the lower-order value
    }
    const auto& table = tables_[static_cast<std::size_t>(n)];
    const auto entry = table.find(detail::extend(ctx, word));
    const double count =
        entry == table.end() ? 0.0 : static_cast<double>(entry->second);
    const double total = static_cast<double>(stat_it->second.total);
    const double discount = discounts_[static_cast<std::size_t>(n)];
    const double reserved =
        discount * static_cast<double>(stat_it->second.distinct) / total;
    p = std::max(count - discount, 0.0) / total + reserved * p;
  }
  return p;
}

double NGramModel::log_prob(const Sentence& s, bool include_eos) const {
  const auto ids = encode(s);
  std::vector<std::uint32_t> history(
      static_cast<std::size_t>(std::max(order_ - 1, 0)), bos_id());
  double sum = 0.0;
  auto step = [&](std::uint32_t id) {
    sum += std::log(conditional_prob(history, id));
    if (!history.empty()) {
      history.erase(history.begin());
      history.push_back(id);
    }
  };
  for (std::uint32_t id : ids) {
    step(id);
  }
  if (include_eos) {
    step(eos_id());
  }
  return sum;
}

std::uint64_t NGramModel::table_size(int n) const {
  if (n < 1 || n > order_) {
    throw std::invalid_argument("table_size: order out of range");
  }
  return tables_[static_cast<std::size_t>(n)].size();
}

namespace {

void write_vocab(BinaryWriter& writer, const Vocabulary& vocab) {
  writer.write_u64(vocab.min_count());
  writer.write_u32(static_cast<std::uint32_t>(vocab.size()));
  for (const std::string& w : vocab.words()) {
    writer.write_string(w);
  }
}

Vocabulary read_vocab(BinaryReader& reader) {
  const std::uint64_t min_count = reader.read_u64();
  const std::uint32_t size = reader.read_u32();
  std::vector<std::string> words;
  words.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    words.push_back(reader.read_string());
  }
  // Ids are lexicographic by construction, so from_words reproduces them.
  return Vocabulary::from_words(std::move(words), min_count);
}

}  // namespace

void NGramModel::save(const std::filesystem::path& path) const {
  BinaryWriter writer(path);
  writer.write_magic(ModelKind::kNGram);
  writer.write_u32(static_cast<std::uint32_t>(order_));
  write_vocab(writer, vocab_);
  for (int n = 1; n <= order_; ++n) {
    writer.write_f64(discounts_[static_cast<std::size_t>(n)]);
  }
  for (int n = 1; n <= order_; ++n) {
    const auto& table = tables_[static_cast<std::size_t>(n)];
    std::vector<std::pair<Gram, std::uint32_t>> entries(table.begin(),
                                                        table.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    writer.write_u64(entries.size());
    for (const auto& [gram, count] : entries) {
      for (std::uint8_t i = 0; i < gram.len; ++i) {
        writer.write_u32(gram.ids[i]);
      }
      writer.write_u32(count);
    }
  }
  writer.close();
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  BinaryReader reader(path);
  reader.expect_magic(ModelKind::kNGram);
  NGramModel model;
  model.order_ = static_cast<int>(reader.read_u32());
  if (model.order_ < 1 || model.order_ > kMaxNGramOrder) {
    throw std::runtime_error("model file has invalid order");
  }
  model.vocab_ = read_vocab(reader);
  model.discounts_.assign(static_cast<std::size_t>(model.order_) + 1, 0.0);
  for (int n = 1; n <= model.order_; ++n) {
    model.discounts_[static_cast<std::size_t>(n)] = reader.read_f64();
  }
  model.tables_.resize(static_cast<std::size_t>(model.order_) + 1);
  for (int n = 1; n <= model.order_; ++n) {
    const std::uint64_t entries = reader.read_u64();
    auto& table = model.tables_[static_cast<std::size_t>(n)];
    table.reserve(static_cast<std::size_t>(entries));
    for (std::uint64_t e = 0; e < entries; ++e) {
      Gram gram;
      gram.len = static_cast<std::uint8_t>(n);
      for (int i = 0; i < n; ++i) {
        gram.ids[static_cast<std::size_t>(i)] = reader.read_u32();
      }
      table.emplace(gram, reader.read_u32());
    }
  }
  model.rebuild_context_stats();
  return model;
}

double perplexity(const NGramModel& model, std::span<const Sentence> corpus,
                  bool include_eos) {
  if (corpus.empty()) {
    throw std::invalid_argument("perplexity of an empty corpus is undefined");
  }
  double total_logprob = 0.0;
  std::uint64_t predicted = 0;
  for (const Sentence& s : corpus) {
    total_logprob += model.log_prob(s, include_eos);
    predicted += s.tokens.size() + (include_eos ? 1 : 0);
  }
  if (predicted == 0) {
    throw std::invalid_argument("perplexity over zero predicted tokens");
  }
  return std::exp(-total_logprob / static_cast<double>(predicted));
}

UnigramModel::Trainer::Trainer(Vocabulary vocab) : vocab_(std::move(vocab)) {
  counts_.assign(vocab_.size(), 0);
}

void UnigramModel::Trainer::add(const Sentence& s) {
  for (const Token& t : s.tokens) {
    ++counts_[vocab_.id(t)];
    ++total_;
  }
}

UnigramModel UnigramModel::Trainer::finish(double unk_floor) && {
  if (total_ == 0) {
    throw std::runtime_error("cannot train a unigram model on an empty corpus");
  }
  if (!(unk_floor > 0.0 && unk_floor < 1.0)) {
    throw std::invalid_argument("unk floor must lie in (0, 1)");
  }
  UnigramModel model;
  model.vocab_ = std::move(vocab_);
  model.counts_ = std::move(counts_);
  model.total_ = total_;
  model.unk_floor_ = unk_floor;
  model.compute_log_probs();
  return model;
}

void UnigramModel::compute_log_probs() {
  std::size_t unseen = 0;
  for (std::uint64_t c : counts_) {
    if (c == 0) ++unseen;
  }
  log_probs_.assign(counts_.size(), 0.0);
  const double total = static_cast<double>(total_);
  if (unseen == 0) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      log_probs_[i] = std::log(static_cast<double>(counts_[i]) / total);
    }
    return;
  }
  const double seen_scale = 1.0 - unk_floor_;
  const double unseen_mass = unk_floor_ / static_cast<double>(unseen);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    log_probs_[i] =
        counts_[i] == 0
            ? std::log(unseen_mass)
            : std::log(static_cast<double>(counts_[i]) / total * seen_scale);
  }
}

double UnigramModel::log_prob_word(std::string_view w) const {
  return log_probs_[vocab_.id(w)];
}

double UnigramModel::log_prob(const Sentence& s) const {
  double sum = 0.0;
  for (const Token& t : s.tokens) {
    sum += log_probs_[vocab_.id(t)];
  }
  return sum;
}

void UnigramModel::save(const std::filesystem::path& path) const {
  BinaryWriter writer(path);
  writer.write_magic(ModelKind::kUnigram);
  write_vocab(writer, vocab_);
  writer.write_f64(unk_floor_);
  writer.write_u64(total_);
  writer.write_u32(static_cast<std::uint32_t>(counts_.size()));
  for (std::uint64_t c : counts_) {
    writer.write_u64(c);
  }
  writer.close();
}

UnigramModel UnigramModel::load(const std::filesystem::path& path) {
  BinaryReader reader(path);
  reader.expect_magic(ModelKind::kUnigram);
  UnigramModel model;
  model.vocab_ = read_vocab(reader);
  model.unk_floor_ = reader.read_f64();
  model.total_ = reader.read_u64();
  const std::uint32_t size = reader.read_u32();
  if (size != model.vocab_.size()) {
    throw std::runtime_error("unigram model count table does not match vocab");
  }
  model.counts_.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    model.counts_[i] = reader.read_u64();
  }
  model.compute_log_probs();
  return model;
}

}  // namespace acceptlm
