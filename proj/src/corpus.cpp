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

#include "parascore/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "parascore/error.hpp"

namespace parascore {
namespace {

using json = nlohmann::json;

class LineReader {
 public:
  LineReader(const json& object, std::size_t line) : object_(object), line_(line) {}

  std::string text(const char* field) const {
    const json& value = get(field);
    if (!value.is_string()) fail(field, "expected a string");
    auto out = value.get<std::string>();
    if (out.empty()) fail(field, "must not be empty");
    return out;
  }

  int integer(const char* field, int lo, int hi) const {
    const json& value = get(field);
    if (!value.is_number_integer()) fail(field, "expected an integer");
    const auto v = value.get<long long>();
    if (v < lo || v > hi) {
      fail(field, "value " + std::to_string(v) + " outside " +
                      std::to_string(lo) + ".." + std::to_string(hi));
    }
    return static_cast<int>(v);
  }

  bool boolean(const char* field) const {
    const json& value = get(field);
    if (!value.is_boolean()) fail(field, "expected a boolean");
    return value.get<bool>();
  }

  void only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& item : object_.items()) {
      bool known = false;
      for (auto name : allowed) known = known || item.key() == name;
      if (!known) fail(item.key(), "field not part of the rating scheme");
    }
  }

  [[noreturn]] void fail(const std::string& field, const std::string& why) const {
    throw Error(ErrorCode::kSchemaError, why, line_, field);
  }

 private:
  const json& get(const char* field) const {
    const auto it = object_.find(field);
    if (it == object_.end()) fail(field, "missing field");
    return *it;
  }

  const json& object_;
  std::size_t line_;
};

Sample parse_sample(const json& object, std::size_t line) {
  const LineReader reader(object, line);
  Sample sample;
  sample.id = reader.text("id");
  sample.reference = reader.text("reference");
  sample.hypothesis = reader.text("hypothesis");
  const std::string scheme = reader.text("scheme");
  if (scheme == "hsr") {
    reader.only({"id", "reference", "hypothesis", "scheme", "semantic",
                 "grammar_ok", "punctuation_ok", "capitalization_ok"});
    sample.rating = SemanticRating{reader.integer("semantic", 0, 3),
                                   reader.boolean("grammar_ok"),
                                   reader.boolean("punctuation_ok"),
                                   reader.boolean("capitalization_ok")};
  } else if (scheme == "otr") {
    reader.only({"id", "reference", "hypothesis", "scheme", "stars"});
    sample.rating = StarRating{reader.integer("stars", 1, 5)};
  } else {
    reader.fail("scheme", "unknown scheme '" + scheme + "'");
  }
  return sample;
}

}  // namespace

std::vector<Sample> parse_dataset(std::istream& in) {
  std::vector<Sample> samples;
  std::set<std::string> ids;
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
    Sample sample = parse_sample(object, line_no);
    sample.source_line = line_no;
    if (!ids.insert(sample.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id '" + sample.id + "'",
                  line_no, "id");
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<Sample> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open dataset '" + path.string() + "'");
  }
  return parse_dataset(in);
}

void write_dataset(std::ostream& out, std::span<const Sample> samples) {
  for (const auto& sample : samples) {
    nlohmann::ordered_json object;
    object["id"] = sample.id;
    object["reference"] = sample.reference;
    object["hypothesis"] = sample.hypothesis;
    if (const auto* hsr = std::get_if<SemanticRating>(&sample.rating)) {
      object["scheme"] = "hsr";
      object["semantic"] = hsr->semantic;
      object["grammar_ok"] = hsr->grammar_ok;
      object["punctuation_ok"] = hsr->punctuation_ok;
      object["capitalization_ok"] = hsr->capitalization_ok;
    } else {
      object["scheme"] = "otr";
      object["stars"] = std::get<StarRating>(sample.rating).stars;
    }
    out << object.dump() << '\n';
  }
}

std::vector<Sample> filter_distinct(std::span<const Sample> samples) {
  std::vector<Sample> kept;
  for (const auto& sample : samples) {
    // Levenshtein distance > 0 on raw text is plain inequality.
    if (sample.reference != sample.hypothesis) kept.push_back(sample);
  }
  return kept;
}

double human_value(const HumanRating& rating) {
  if (const auto* hsr = std::get_if<SemanticRating>(&rating)) {
    return static_cast<double>(hsr->semantic);
  }
  return static_cast<double>(std::get<StarRating>(rating).stars);
}

}  // namespace parascore
