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

#include "parascore/textnorm.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace parascore {
namespace {

template <typename Fn>
void for_each_codepoint(std::string_view text, Fn&& fn) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t offset = 0;
  while (offset < length) {
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    if (c < 0) c = 0xFFFD;
    fn(c);
  }
}

void append_codepoint(std::string& out, UChar32 c) {
  char buffer[U8_MAX_LENGTH];
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buffer, n, c);
  out.append(buffer, static_cast<std::size_t>(n));
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

}  // namespace

std::string normalize(std::string_view text, const NormalizationConfig& config) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for_each_codepoint(text, [&](UChar32 c) {
    if (config.strip_punctuation && u_ispunct(c)) return;
    if (config.collapse_whitespace && is_space(c)) {
      pending_space = true;
      return;
    }
    if (pending_space) {
      if (!out.empty()) out.push_back(' ');
      pending_space = false;
    }
    append_codepoint(out, config.lowercase ? u_tolower(c) : c);
  });
  return out;
}

TokenSequence word_tokens(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  for_each_codepoint(text, [&](UChar32 c) {
    if (is_space(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      append_codepoint(current, c);
    }
  });
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenSequence char_tokens(std::string_view text) {
  TokenSequence tokens;
  for_each_codepoint(text, [&](UChar32 c) {
    std::string unit;
    append_codepoint(unit, c);
    tokens.push_back(std::move(unit));
  });
  return tokens;
}

std::string join_tokens(const TokenSequence& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::size_t codepoint_length(std::string_view text) {
  std::size_t count = 0;
  for_each_codepoint(text, [&](UChar32) { ++count; });
  return count;
}

}  // namespace parascore
