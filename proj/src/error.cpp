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

#include "parascore/error.hpp"

#include <utility>

namespace parascore {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kEmptyHypothesis: return "EmptyHypothesis";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoTermination: return "NoTermination";
    case ErrorCode::kMissingEntry: return "MissingEntry";
    case ErrorCode::kAllPairsExcluded: return "AllPairsExcluded";
    case ErrorCode::kZeroVariance: return "ZeroVariance";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownRun: return "UnknownRun";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::size_t line, const std::string& field) {
  std::string out(error_code_name(code));
  if (line != 0) out += " at line " + std::to_string(line);
  if (!field.empty()) out += " (field '" + field + "')";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line,
             std::string field)
    : std::runtime_error(format_message(code, message, line, field)),
      code_(code),
      line_(line),
      field_(std::move(field)),
      message_(message) {}

}  // namespace parascore
