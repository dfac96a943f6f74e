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

#include "codealike/normalize.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "text_util.hpp"

namespace codealike {

namespace {

using internal::IsAsciiSpace;
using internal::IsIdentifierChar;
using internal::IsIdentifierStart;

// A byte of the working text together with the source line it came from.
struct Cell {
  char c;
  std::uint32_t line;
};

using Cells = std::vector<Cell>;

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Length of the valid UTF-8 sequence at s[i], or 0 if invalid. `consumed`
// receives how many bytes form the longest valid-looking prefix (>= 1).
std::size_t Utf8SequenceLength(std::string_view s, std::size_t i,
                               std::size_t& consumed) {
  auto at = [&](std::size_t j) -> unsigned char {
    return static_cast<unsigned char>(s[j]);
  };
  const unsigned char lead = at(i);
  consumed = 1;
  if (lead < 0x80) return 1;

  std::size_t len = 0;
  unsigned char lo = 0x80;
  unsigned char hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  } else if (lead >= 0xE0 && lead <= 0xEF) {
    len = 3;
    if (lead == 0xE0) lo = 0xA0;
    if (lead == 0xED) hi = 0x9F;
  } else if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
    if (lead == 0xF0) lo = 0x90;
    if (lead == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }

  for (std::size_t k = 1; k < len; ++k) {
    if (i + k >= s.size()) return 0;
    const unsigned char c = at(i + k);
    const bool ok = (k == 1) ? (c >= lo && c <= hi) : IsContinuation(c);
    if (!ok) return 0;
    consumed = k + 1;
  }
  return len;
}

Cells ToCells(std::string_view text) {
  Cells cells;
  cells.reserve(text.size());
  std::uint32_t line = 1;
  for (char c : text) {
    cells.push_back({c, line});
    if (c == '\n') ++line;
  }
  return cells;
}

bool MatchesAt(const Cells& cells, std::size_t i, std::string_view token) {
  if (token.size() > cells.size() - i) return false;
  for (std::size_t k = 0; k < token.size(); ++k) {
    if (cells[i + k].c != token[k]) return false;
  }
  return true;
}

// Stage 1. Newlines inside block comments are kept so the line structure
// seen by the import filter stays intact.
Cells StripComments(const Cells& in, const LanguageConfig& config,
                    std::vector<std::string>& diagnostics) {
  Cells out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    // Longest opening delimiter wins, so "/**" style variants can coexist.
    const BlockComment* block = nullptr;
    std::size_t line_prefix_len = 0;
    for (const BlockComment& b : config.block_comments) {
      if (MatchesAt(in, i, b.open) &&
          (block == nullptr || b.open.size() > block->open.size())) {
        block = &b;
      }
    }
    for (const std::string& p : config.line_comment_prefixes) {
      if (MatchesAt(in, i, p) && p.size() > line_prefix_len) {
        line_prefix_len = p.size();
      }
    }

    if (line_prefix_len > 0 &&
        (block == nullptr || line_prefix_len >= block->open.size())) {
      while (i < in.size() && in[i].c != '\n') ++i;
      continue;
    }
    if (block != nullptr) {
      const std::uint32_t open_line = in[i].line;
      i += block->open.size();
      bool closed = false;
      while (i < in.size()) {
        if (MatchesAt(in, i, block->close)) {
          i += block->close.size();
          closed = true;
          break;
        }
        if (in[i].c == '\n') out.push_back(in[i]);
        ++i;
      }
      if (!closed) {
        diagnostics.push_back("unterminated block comment '" + block->open +
                              "' opened at line " + std::to_string(open_line) +
                              "; rest of input treated as comment");
      }
      continue;
    }
    out.push_back(in[i]);
    ++i;
  }
  return out;
}

bool IsImportLine(const Cells& cells, std::size_t begin, std::size_t end,
                  const LanguageConfig& config) {
  while (begin < end && IsAsciiSpace(cells[begin].c)) ++begin;
  for (const std::string& pattern : config.import_line_patterns) {
    if (end - begin < pattern.size() || !MatchesAt(cells, begin, pattern)) {
      continue;
    }
    // "import" must not match "imported = 1".
    const std::size_t after = begin + pattern.size();
    if (IsIdentifierChar(pattern.back()) && after < end &&
        IsIdentifierChar(cells[after].c)) {
      continue;
    }
    return true;
  }
  return false;
}

// Stage 2.
Cells DropImportLines(const Cells& in, const LanguageConfig& config) {
  if (config.import_line_patterns.empty()) return in;
  Cells out;
  out.reserve(in.size());
  std::size_t begin = 0;
  while (begin < in.size()) {
    std::size_t end = begin;
    while (end < in.size() && in[end].c != '\n') ++end;
    if (!IsImportLine(in, begin, end, config)) {
      out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(begin),
                 in.begin() + static_cast<std::ptrdiff_t>(end));
    }
    if (end < in.size()) out.push_back(in[end]);  // the newline itself
    begin = end + 1;
  }
  return out;
}

// Stages 4 and 5 on already lowercased cells.
Cells RewriteIdentifiers(const Cells& in, const LanguageConfig& config) {
  Cells out;
  out.reserve(in.size());
  std::size_t i = 0;
  std::string word;
  while (i < in.size()) {
    if (!IsIdentifierStart(in[i].c)) {
      out.push_back(in[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    word.clear();
    while (j < in.size() && IsIdentifierChar(in[j].c)) word.push_back(in[j++].c);
    if (config.keywords.count(word) == 0) {
      if (config.replace_identifiers) {
        out.push_back({config.dummy_symbol, in[i].line});
      } else {
        out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(i),
                   in.begin() + static_cast<std::ptrdiff_t>(j));
      }
    }
    i = j;
  }
  return out;
}

NormalizedText Emit(const Cells& cells, std::string_view strip,
                    std::string source_id) {
  NormalizedText out;
  out.source_id = std::move(source_id);
  out.bytes.reserve(cells.size());
  out.line_of.reserve(cells.size());
  for (const Cell& cell : cells) {
    if (IsAsciiSpace(cell.c)) continue;
    if (strip.find(cell.c) != std::string_view::npos) continue;
    out.bytes.push_back(cell.c);
    out.line_of.push_back(cell.line);
  }
  return out;
}

}  // namespace

std::string SanitizeUtf8(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  std::size_t i = 0;
  while (i < input.size()) {
    std::size_t consumed = 1;
    const std::size_t len = Utf8SequenceLength(input, i, consumed);
    if (len == 0) {
      out.push_back(kInvalidUtf8Substitute);
      i += consumed;
    } else {
      out.append(input.substr(i, len));
      i += len;
    }
  }
  return out;
}

NormalizedText Normalize(std::string_view source, const LanguageConfig& config,
                         std::string source_id) {
  std::vector<std::string> diagnostics;
  Cells cells = ToCells(SanitizeUtf8(source));
  cells = StripComments(cells, config, diagnostics);
  cells = DropImportLines(cells, config);
  for (Cell& cell : cells) cell.c = internal::AsciiLower(cell.c);
  cells = RewriteIdentifiers(cells, config);
  NormalizedText out = Emit(cells, config.strip_punctuation, std::move(source_id));
  out.diagnostics = std::move(diagnostics);
  return out;
}

NormalizedText NormalizeEssay(std::string_view source, std::string source_id) {
  Cells cells = ToCells(SanitizeUtf8(source));
  for (Cell& cell : cells) cell.c = internal::AsciiLower(cell.c);
  return Emit(cells, {}, std::move(source_id));
}

NormalizedText NormalizeFor(std::string_view source,
                            const LanguageConfig& config,
                            std::string source_id) {
  if (config.name == "plaintext") {
    return NormalizeEssay(source, std::move(source_id));
  }
  return Normalize(source, config, std::move(source_id));
}

}  // namespace codealike
