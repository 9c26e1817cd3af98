// Copyright 2026 The Parascore Authors.
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

#include "parascore/scores.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "parascore/error.hpp"

namespace parascore {

std::string RunKey::name() const {
  return std::string(metric_name(metric)) + "/" + std::string(mode_name(mode)) +
         "/" + std::to_string(n) + "/" + std::string(aggregation_name(aggregation));
}

std::optional<RunKey> RunKey::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    parts.push_back(text.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() != 4) return std::nullopt;
  const auto metric = parse_metric(parts[0]);
  const auto mode = parse_mode(parts[1]);
  const auto aggregation = parse_aggregation(parts[3]);
  std::size_t n = 0;
  const auto [end, ec] =
      std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (!metric || !mode || !aggregation || ec != std::errc() ||
      end != parts[2].data() + parts[2].size()) {
    return std::nullopt;
  }
  return RunKey{*metric, *mode, n, *aggregation};
}

ScoreRecord make_score_record(const Sample& sample, const MetricScore& score) {
  return ScoreRecord{
      sample.id,
      RunKey{score.metric, score.mode.kind, score.mode.n, score.aggregation.kind},
      score.value, score.candidate_count, human_value(sample.rating)};
}

void write_score_line(std::ostream& out, const ScoreRecord& record) {
  nlohmann::ordered_json object;
  object["id"] = record.id;
  object["metric"] = metric_name(record.run.metric);
  object["mode"] = mode_name(record.run.mode);
  object["n"] = record.run.n;
  object["aggregation"] = aggregation_name(record.run.aggregation);
  object["value"] = record.value;
  object["candidate_count"] = record.candidate_count;
  object["human"] = record.human;
  out << object.dump() << '\n';
}

namespace {

using json = nlohmann::json;

const json& field(const json& object, const char* name, std::size_t line) {
  const auto it = object.find(name);
  if (it == object.end()) {
    throw Error(ErrorCode::kSchemaError, "missing field", line, name);
  }
  return *it;
}

std::string string_field(const json& object, const char* name, std::size_t line) {
  const json& value = field(object, name, line);
  if (!value.is_string()) {
    throw Error(ErrorCode::kSchemaError, "expected a string", line, name);
  }
  return value.get<std::string>();
}

double number_field(const json& object, const char* name, std::size_t line) {
  const json& value = field(object, name, line);
  if (!value.is_number()) {
    throw Error(ErrorCode::kSchemaError, "expected a number", line, name);
  }
  return value.get<double>();
}

std::size_t count_field(const json& object, const char* name, std::size_t line) {
  const json& value = field(object, name, line);
  if (!value.is_number_unsigned()) {
    throw Error(ErrorCode::kSchemaError, "expected a non-negative integer", line,
                name);
  }
  return value.get<std::size_t>();
}

template <typename T>
T enum_field(const json& object, const char* name, std::size_t line,
             std::optional<T> (*parse)(std::string_view)) {
  const std::string text = string_field(object, name, line);
  const auto parsed = parse(text);
  if (!parsed) {
    throw Error(ErrorCode::kSchemaError, "unknown value '" + text + "'", line,
                name);
  }
  return *parsed;
}

}  // namespace

std::vector<ScoreRecord> parse_scores(std::istream& in) {
  std::vector<ScoreRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
    if (!object.is_object()) {
      throw Error(ErrorCode::kParseError, "expected a JSON object", line_no);
    }
    ScoreRecord record;
    record.id = string_field(object, "id", line_no);
    record.run.metric = enum_field(object, "metric", line_no, parse_metric);
    record.run.mode = enum_field(object, "mode", line_no, parse_mode);
    record.run.n = count_field(object, "n", line_no);
    record.run.aggregation =
        enum_field(object, "aggregation", line_no, parse_aggregation);
    record.value = number_field(object, "value", line_no);
    record.candidate_count = count_field(object, "candidate_count", line_no);
    record.human = number_field(object, "human", line_no);
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ScoreRecord> load_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open scores '" + path.string() + "'");
  }
  return parse_scores(in);
}

}  // namespace parascore
