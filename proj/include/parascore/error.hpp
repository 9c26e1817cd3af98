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

#ifndef PARASCORE_ERROR_HPP_
#define PARASCORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parascore {

enum class ErrorCode {
  kEmptyReference,
  kEmptyHypothesis,
  kEmptyInput,
  kNoTermination,
  kMissingEntry,
  kAllPairsExcluded,
  kZeroVariance,
  kTooFewSamples,
  kParseError,
  kSchemaError,
  kDuplicateId,
  kUnknownRun,
  kIoError,
};

/// Stable name used in CLI messages and TSV status columns.
std::string_view error_code_name(ErrorCode code);

/// Every recoverable data error raised by the library. `line` is 1-based and
/// 0 when the error is not tied to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0,
        std::string field = {});

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }
  /// The message without the code/line prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::size_t line_;
  std::string field_;
  std::string message_;
};

}  // namespace parascore

#endif  // PARASCORE_ERROR_HPP_
