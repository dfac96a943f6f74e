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

#ifndef CODEALIKE_LANGUAGE_CONFIG_HPP_
#define CODEALIKE_LANGUAGE_CONFIG_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace codealike {

struct BlockComment {
  std::string open;
  std::string close;

  friend bool operator==(const BlockComment&, const BlockComment&) = default;
};

// Declarative normalization rules for one source language.
//
// Identifiers are always ASCII words: a letter or underscore followed by
// letters, digits or underscores. `replace_identifiers` turns the dummy
// substitution off (the plaintext config does this).
struct LanguageConfig {
  std::string name;
  std::vector<std::string> line_comment_prefixes;
  std::vector<BlockComment> block_comments;
  std::set<std::string> keywords;  // lowercase
  std::vector<std::string> import_line_patterns;
  std::string strip_punctuation;  // sorted, unique
  char dummy_symbol = '$';
  bool replace_identifiers = true;

  friend bool operator==(const LanguageConfig&,
                         const LanguageConfig&) = default;
};

// Parses the `key = value` config format. `origin` is only used in messages.
// Throws Error(kMalformedConfig) on syntax problems and
// Error(kInvalidConfig) when a field violates an invariant.
LanguageConfig ParseLanguageConfig(std::string_view text,
                                   std::string_view origin = "<memory>");

LanguageConfig LoadLanguageConfig(const std::filesystem::path& path);

// Canonical text form; ParseLanguageConfig(FormatLanguageConfig(c)) == c.
std::string FormatLanguageConfig(const LanguageConfig& config);

// Normalizes keyword case and punctuation order, then checks invariants.
void ValidateLanguageConfig(LanguageConfig& config);

// Config text compiled into the library ("java", "plaintext", "c",
// "python"). Returns an empty view for unknown names.
std::string_view BuiltinConfigText(std::string_view name);
std::vector<std::string> BuiltinLanguageNames();

// Looks for <name>.conf in $CODEALIKE_CONFIG_PATH first, then the builtin
// set. Throws Error(kUnknownLanguage).
LanguageConfig ResolveLanguage(std::string_view name);

}  // namespace codealike

#endif  // CODEALIKE_LANGUAGE_CONFIG_HPP_
