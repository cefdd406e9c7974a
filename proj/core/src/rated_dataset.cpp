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

#include "acceptlm/rated_dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "acceptlm/tokenizer.hpp"

namespace acceptlm {

namespace {

constexpr const char* kExpectedHeader = "id\tsentence\texpert\tr1\tr2\tr3\tr4\tr5";

[[noreturn]] void row_error(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           what);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

int parse_rating(const std::string& field, const std::filesystem::path& path,
                 std::size_t line) {
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(field, &consumed);
  } catch (const std::exception&) {
    row_error(path, line, "rating is not an integer: '" + field + "'");
  }
  if (consumed != field.size()) {
    row_error(path, line, "rating is not an integer: '" + field + "'");
  }
  if (value < 1 || value > 4) {
    row_error(path, line,
              "rating out of range [1,4]: " + std::to_string(value));
  }
  return value;
}

}  // namespace

double aggregate_gold(int expert, const std::array<int, 5>& workers,
                      GoldAggregation agg) {
  double sum = 0.0;
  for (int r : workers) {
    sum += r;
  }
  if (agg == GoldAggregation::kWorkersPlusExpert) {
    return (sum + expert) / 6.0;
  }
  return sum / 5.0;
}

std::vector<RatedSentence> load_rated_dataset(const std::filesystem::path& path,
                                              int filter_min_len,
                                              GoldAggregation agg) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open rated dataset: " + path.string());
  }

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty rated dataset: " + path.string());
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != kExpectedHeader) {
    row_error(path, line_no,
              std::string("expected header '") + kExpectedHeader + "'");
  }

  std::vector<RatedSentence> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 8) {
      row_error(path, line_no,
                "expected 8 tab-separated fields, got " +
                    std::to_string(fields.size()));
    }
    RatedSentence row;
    row.id = fields[0];
    if (row.id.empty()) {
      row_error(path, line_no, "empty id");
    }
    row.sentence = make_sentence(fields[1]);
    if (row.sentence.tokens.empty()) {
      row_error(path, line_no, "sentence tokenizes to nothing");
    }
    row.expert_rating = parse_rating(fields[2], path, line_no);
    for (int k = 0; k < 5; ++k) {
      row.worker_ratings[static_cast<std::size_t>(k)] =
          parse_rating(fields[static_cast<std::size_t>(3 + k)], path, line_no);
    }
    row.gold = aggregate_gold(row.expert_rating, row.worker_ratings, agg);
    if (static_cast<int>(row.sentence.tokens.size()) < filter_min_len) {
      continue;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace acceptlm
