// Copyright 2026 The CodeAlike Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEALIKE_NORMALIZE_HPP_
#define CODEALIKE_NORMALIZE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codealike/language_config.hpp"

namespace codealike {

// The filtered byte stream of one document. line_of[i] is the 1-based line
// of the source that produced bytes[i].
struct NormalizedText {
  std::string bytes;
  std::vector<std::uint32_t> line_of;
  std::string source_id;
  // Non-fatal problems, e.g. an unterminated block comment.
  std::vector<std::string> diagnostics;

  std::size_t size() const { return bytes.size(); }
};

// Byte substituted for every invalid UTF-8 sequence in the input.
inline constexpr char kInvalidUtf8Substitute = '?';

// Replaces each maximal invalid UTF-8 sequence with kInvalidUtf8Substitute.
std::string SanitizeUtf8(std::string_view input);

// Code mode. Stages, in order: drop line and block comments, drop import
// lines, lowercase, delete keywords, replace identifiers with the dummy
// symbol, delete strip_punctuation and whitespace.
NormalizedText Normalize(std::string_view source, const LanguageConfig& config,
                         std::string source_id = {});

// Essay mode: lowercase and drop whitespace, nothing else.
NormalizedText NormalizeEssay(std::string_view source,
                              std::string source_id = {});

// Dispatches on config.name: "plaintext" goes through NormalizeEssay.
NormalizedText NormalizeFor(std::string_view source,
                            const LanguageConfig& config,
                            std::string source_id = {});

}  // namespace codealike

#endif  // CODEALIKE_NORMALIZE_HPP_
