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

#include "codealike/language_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "codealike/error.hpp"
#include "text_util.hpp"

namespace codealike {

namespace {

using internal::IsAsciiSpace;
using internal::Trim;

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    std::size_t comma = value.find(',', pos);
    if (comma == std::string_view::npos) comma = value.size();
    std::string_view item = Trim(value.substr(pos, comma - pos));
    if (!item.empty()) items.emplace_back(item);
    pos = comma + 1;
  }
  return items;
}

bool ParseBool(std::string_view value, bool& out) {
  if (value == "true" || value == "yes" || value == "1") {
    out = true;
    return true;
  }
  if (value == "false" || value == "no" || value == "0") {
    out = false;
    return true;
  }
  return false;
}

[[noreturn]] void Malformed(std::string_view origin, std::size_t line,
                            const std::string& what) {
  throw Error(ErrorCode::kMalformedConfig,
              std::string(origin) + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void Invalid(std::string_view field, const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig,
              "field '" + std::string(field) + "': " + what);
}

bool IsIdentifierWord(std::string_view word) {
  if (word.empty()) return false;
  if (!internal::IsIdentifierStart(word.front())) return false;
  return std::all_of(word.begin() + 1, word.end(), internal::IsIdentifierChar);
}

}  // namespace

void ValidateLanguageConfig(LanguageConfig& config) {
  if (config.name.empty()) Invalid("name", "must not be empty");

  std::set<std::string> lowered;
  for (const std::string& kw : config.keywords) {
    std::string low = internal::AsciiLower(kw);
    if (!IsIdentifierWord(low)) {
      Invalid("keywords", "'" + kw + "' is not an identifier");
    }
    lowered.insert(std::move(low));
  }
  config.keywords = std::move(lowered);

  std::string punct;
  for (char c : config.strip_punctuation) {
    if (!IsAsciiSpace(c)) punct.push_back(c);
  }
  std::sort(punct.begin(), punct.end());
  punct.erase(std::unique(punct.begin(), punct.end()), punct.end());
  config.strip_punctuation = std::move(punct);

  if (IsAsciiSpace(config.dummy_symbol) || config.dummy_symbol == '\0') {
    Invalid("dummy_symbol", "must be a visible character");
  }
  if (config.strip_punctuation.find(config.dummy_symbol) != std::string::npos) {
    Invalid("dummy_symbol", std::string("'") + config.dummy_symbol +
                                "' is also listed in strip_punctuation");
  }

  for (const BlockComment& block : config.block_comments) {
    if (block.open.empty() || block.close.empty()) {
      Invalid("block_comment_delimiters", "delimiters must be non-empty");
    }
    if (block.open == block.close) {
      Invalid("block_comment_delimiters",
              "open and close must differ ('" + block.open + "')");
    }
  }
  for (const std::string& prefix : config.line_comment_prefixes) {
    if (prefix.empty()) Invalid("line_comment_prefixes", "empty prefix");
  }
  for (const std::string& pattern : config.import_line_patterns) {
    if (pattern.empty()) Invalid("import_line_patterns", "empty pattern");
  }
}

LanguageConfig ParseLanguageConfig(std::string_view text,
                                   std::string_view origin) {
  LanguageConfig config;
  std::set<std::string> seen;
  bool have_name = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      Malformed(origin, line_no, "expected 'key = value'");
    }
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) Malformed(origin, line_no, "missing key");
    if (!seen.insert(key).second) {
      Malformed(origin, line_no, "duplicate key '" + key + "'");
    }

    if (key == "name") {
      config.name = std::string(value);
      have_name = true;
    } else if (key == "line_comment_prefixes") {
      config.line_comment_prefixes = SplitList(value);
    } else if (key == "block_comment_delimiters") {
      for (const std::string& item : SplitList(value)) {
        std::size_t sep = item.find("..");
        if (sep == std::string::npos) {
          Malformed(origin, line_no,
                    "block comment '" + item + "' is not 'open..close'");
        }
        config.block_comments.push_back(
            {std::string(Trim(std::string_view(item).substr(0, sep))),
             std::string(Trim(std::string_view(item).substr(sep + 2)))});
      }
    } else if (key == "keywords") {
      for (std::string& kw : SplitList(value)) config.keywords.insert(kw);
    } else if (key == "import_line_patterns") {
      config.import_line_patterns = SplitList(value);
    } else if (key == "strip_punctuation") {
      config.strip_punctuation = std::string(value);
    } else if (key == "dummy_symbol") {
      if (value.size() != 1) {
        Invalid("dummy_symbol", "must be exactly one character, got '" +
                                    std::string(value) + "'");
      }
      config.dummy_symbol = value.front();
    } else if (key == "replace_identifiers") {
      if (!ParseBool(value, config.replace_identifiers)) {
        Malformed(origin, line_no,
                  "replace_identifiers expects true or false");
      }
    } else {
      Malformed(origin, line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_name) Invalid("name", "missing");
  ValidateLanguageConfig(config);
  return config;
}

LanguageConfig LoadLanguageConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedConfig,
                "cannot read config " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseLanguageConfig(buf.str(), path.string());
}

std::string FormatLanguageConfig(const LanguageConfig& config) {
  auto join = [](const auto& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += ", ";
      out += item;
    }
    return out;
  };
  std::string out;
  out += "name = " + config.name + "\n";
  out += "line_comment_prefixes = " + join(config.line_comment_prefixes) + "\n";
  std::vector<std::string> blocks;
  for (const BlockComment& b : config.block_comments) {
    blocks.push_back(b.open + ".." + b.close);
  }
  out += "block_comment_delimiters = " + join(blocks) + "\n";
  out += "import_line_patterns = " + join(config.import_line_patterns) + "\n";
  out += "strip_punctuation = " + config.strip_punctuation + "\n";
  out += std::string("dummy_symbol = ") + config.dummy_symbol + "\n";
  out += std::string("replace_identifiers = ") +
         (config.replace_identifiers ? "true" : "false") + "\n";
  out += "keywords = " + join(config.keywords) + "\n";
  return out;
}

LanguageConfig ResolveLanguage(std::string_view name) {
  if (const char* dir = std::getenv("CODEALIKE_CONFIG_PATH");
      dir != nullptr && *dir != '\0') {
    std::filesystem::path candidate =
        std::filesystem::path(dir) / (std::string(name) + ".conf");
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) {
      return LoadLanguageConfig(candidate);
    }
  }
  std::string_view text = BuiltinConfigText(name);
  if (text.empty()) {
    throw Error(ErrorCode::kUnknownLanguage,
                "no language config named '" + std::string(name) + "'");
  }
  return ParseLanguageConfig(text, std::string(name) + ".conf");
}

}  // namespace codealike
