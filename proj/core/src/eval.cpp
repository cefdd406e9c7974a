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

#include "acceptlm/eval.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace acceptlm {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("pearson: length mismatch");
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("pearson: need at least 3 samples");
  }
  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::invalid_argument("pearson: zero variance input");
  }
  const double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
  return r > 1.0 ? 1.0 : (r < -1.0 ? -1.0 : r);
}

ReliabilityReport rater_reliability(std::span<const RatedSentence> dataset,
                                    bool leave_one_out) {
  if (dataset.size() < 3) {
    throw std::invalid_argument("rater reliability needs >= 3 sentences");
  }
  ReliabilityReport report;
  report.sample_size = dataset.size();
  report.leave_one_out = leave_one_out;

  std::vector<double> worker_mean(dataset.size());
  std::vector<double> expert(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    double sum = 0.0;
    for (int r : dataset[i].worker_ratings) {
      sum += r;
    }
    worker_mean[i] = sum / 5.0;
    expert[i] = dataset[i].expert_rating;
  }

  std::vector<double> column(dataset.size());
  std::vector<double> reference(dataset.size());
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      const double own = dataset[i].worker_ratings[k];
      column[i] = own;
      reference[i] =
          leave_one_out ? (worker_mean[i] * 5.0 - own) / 4.0 : worker_mean[i];
    }
    report.worker_r[k] = pearson(column, reference);
  }
  report.expert_r = pearson(expert, worker_mean);
  return report;
}

std::string measure_name(MeasureKind m) {
  switch (m) {
    case MeasureKind::kScore: return "score";
    case MeasureKind::kMis: return "mis";
    case MeasureKind::kNormMul: return "norm_mul";
    case MeasureKind::kNormSub: return "norm_sub";
    case MeasureKind::kSlor: return "slor";
  }
  throw std::logic_error("unknown measure");
}

std::optional<MeasureKind> measure_from_name(std::string_view name) {
  for (MeasureKind m : all_measures()) {
    if (measure_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

std::vector<MeasureKind> all_measures() {
  return {MeasureKind::kScore, MeasureKind::kMis, MeasureKind::kNormMul,
          MeasureKind::kNormSub, MeasureKind::kSlor};
}

namespace {

double measure_value(const ScoreRecord& rec, MeasureKind m) {
  switch (m) {
    case MeasureKind::kScore: return rec.norm_score;
    case MeasureKind::kMis: return rec.mis;
    case MeasureKind::kNormMul: return rec.norm_mul;
    case MeasureKind::kNormSub: return rec.norm_sub;
    case MeasureKind::kSlor: return rec.slor;
  }
  throw std::logic_error("unknown measure");
}

std::string format_r(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string format_alpha(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

EvalReport run_grid(std::span<const RatedSentence> testset,
                    std::span<const GridModel> models,
                    const GridOptions& options, const UnigramModel& unigram,
                    const Dictionary& dict) {
  if (options.alphas.empty() || options.measures.empty()) {
    throw std::invalid_argument("run_grid needs at least one alpha and measure");
  }
  EvalReport report;
  for (const GridModel& model : models) {
    std::vector<RatedSentence> filtered;
    filtered.reserve(testset.size());
    for (const RatedSentence& row : testset) {
      if (static_cast<int>(row.sentence.tokens.size()) >=
          model.filter_min_len) {
        filtered.push_back(row);
      }
    }
    std::vector<double> gold;
    gold.reserve(filtered.size());
    for (const RatedSentence& row : filtered) {
      gold.push_back(row.gold);
    }

    // Raw scores do not depend on alpha; score once and recompute the
    // measures per alpha.
    std::string batch_error;
    ScoredBatch batch;
    try {
      ScoreOptions score_options;
      score_options.alpha = options.alphas.front();
      score_options.correct_spelling = options.correct_spelling;
      score_options.threads = options.threads;
      batch =
          score_batch(filtered, *model.scorer, unigram, dict, score_options);
      report.degenerate_counts[model.name] = batch.degenerate_count;
    } catch (const std::exception& e) {
      batch_error = e.what();
    }

    for (double alpha : options.alphas) {
      std::vector<ScoreRecord> records;
      if (batch_error.empty()) {
        records = batch.records;
        MeasureConfig cfg;
        cfg.alpha = alpha;
        compute_measures(records, cfg);
      }
      for (MeasureKind measure : options.measures) {
        EvalCell cell;
        cell.model = model.name;
        cell.measure = measure_name(measure);
        cell.alpha = alpha;
        cell.sample_size = filtered.size();
        if (!batch_error.empty()) {
          cell.error = batch_error;
        } else {
          try {
            std::vector<double> values;
            values.reserve(records.size());
            for (const ScoreRecord& rec : records) {
              values.push_back(measure_value(rec, measure));
            }
            cell.r = pearson(values, gold);
          } catch (const std::exception& e) {
            cell.error = e.what();
          }
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

std::string EvalReport::to_tsv() const {
  std::string out = "model\tmeasure\talpha\tr\tn\terror\n";
  for (const EvalCell& cell : cells) {
    out += cell.model;
    out += '\t';
    out += cell.measure;
    out += '\t';
    out += format_alpha(cell.alpha);
    out += '\t';
    out += cell.error.empty() ? format_r(cell.r) : "NA";
    out += '\t';
    out += std::to_string(cell.sample_size);
    out += '\t';
    out += cell.error;
    out += '\n';
  }
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["config"] = config_echo;
  j["degenerate_sentences"] = degenerate_counts;
  nlohmann::json cell_array = nlohmann::json::array();
  for (const EvalCell& cell : cells) {
    nlohmann::json c;
    c["model"] = cell.model;
    c["measure"] = cell.measure;
    c["alpha"] = cell.alpha;
    if (cell.error.empty()) {
      c["r"] = cell.r;
    } else {
      c["error"] = cell.error;
    }
    c["n"] = cell.sample_size;
    cell_array.push_back(std::move(c));
  }
  j["cells"] = std::move(cell_array);
  return j.dump(2) + "\n";
}

}  // namespace acceptlm
