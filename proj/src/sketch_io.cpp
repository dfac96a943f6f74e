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

// Sketch file layout (docs/sketch_format.md):
//
//   codealike-sketch <version>
//   source_id <id>
//   params k=<k> t=<t> q=<q> b=<b>
//   digest <sha256:hex or ->
//   normalized_length <n>
//   count <m>
//   <hash> <offset> <line_start> <line_end>      (m lines)
//   checksum sha256:<hex of every preceding byte>

#include <charconv>
#include <fstream>
#include <sstream>

#include "codealike/corpus.hpp"
#include "codealike/digest.hpp"
#include "codealike/error.hpp"
#include "store_util.hpp"

namespace codealike {

namespace {

constexpr std::string_view kMagic = "codealike-sketch ";
constexpr std::string_view kChecksumTag = "checksum ";

class LineReader {
 public:
  LineReader(std::string_view text, std::string_view origin)
      : text_(text), origin_(origin) {}

  std::string_view Next() {
    if (pos_ >= text_.size()) Fail("unexpected end of file");
    std::size_t nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) Fail("missing final newline");
    std::string_view line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_no_;
    return line;
  }

  std::string_view Field(std::string_view key) {
    std::string_view line = Next();
    if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
        line[key.size()] != ' ') {
      Fail("expected '" + std::string(key) + "'");
    }
    return line.substr(key.size() + 1);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kCorruptSketch, std::string(origin_) + ":" +
                                               std::to_string(line_no_) + ": " +
                                               what);
  }

 private:
  std::string_view text_;
  std::string_view origin_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

template <typename T>
bool ParseUnsigned(std::string_view s, T& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string SerializeSketch(const Sketch& sketch) {
  if (sketch.source_id.find_first_of("\r\n") != std::string::npos) {
    throw Error(ErrorCode::kStoreWriteFailed,
                "source id contains a line break: '" + sketch.source_id + "'");
  }
  std::string out;
  out.reserve(128 + sketch.fingerprints.size() * 24);
  out += kMagic;
  out += std::to_string(sketch.format_version) + "\n";
  out += "source_id " + sketch.source_id + "\n";
  out += "params " + FormatParams(sketch.params) + "\n";
  out += "digest " +
         (sketch.source_digest.empty() ? std::string("-") : sketch.source_digest) +
         "\n";
  out += "normalized_length " + std::to_string(sketch.normalized_length) + "\n";
  out += "count " + std::to_string(sketch.fingerprints.size()) + "\n";
  for (const HashedGram& g : sketch.fingerprints) {
    out += std::to_string(g.hash) + ' ' + std::to_string(g.offset) + ' ' +
           std::to_string(g.line_start) + ' ' + std::to_string(g.line_end) +
           '\n';
  }
  out += std::string(kChecksumTag) + ContentDigest(out) + "\n";
  return out;
}

Sketch ParseSketch(std::string_view text, std::string_view origin) {
  LineReader reader(text, origin);

  // Version first, so a newer file is reported as such rather than as a
  // checksum failure.
  std::string_view first = reader.Next();
  if (first.substr(0, kMagic.size()) != kMagic) {
    reader.Fail("not a sketch file");
  }
  int version = 0;
  if (!ParseUnsigned(first.substr(kMagic.size()), version)) {
    reader.Fail("bad format version");
  }
  if (version != kSketchFormatVersion) {
    reader.Fail("format version " + std::to_string(version) +
                " is not supported (expected " +
                std::to_string(kSketchFormatVersion) + ")");
  }

  const std::size_t tag = text.rfind(std::string("\n") + std::string(kChecksumTag));
  if (tag == std::string_view::npos || text.empty() || text.back() != '\n') {
    reader.Fail("missing checksum line");
  }
  const std::string_view body = text.substr(0, tag + 1);
  const std::string_view stored =
      text.substr(tag + 1 + kChecksumTag.size(),
                  text.size() - (tag + 1 + kChecksumTag.size()) - 1);
  if (ContentDigest(body) != stored) reader.Fail("checksum mismatch");

  Sketch sketch;
  sketch.format_version = version;
  sketch.source_id = std::string(reader.Field("source_id"));
  std::optional<Params> params = ParseParams(reader.Field("params"));
  if (!params) reader.Fail("bad params");
  try {
    ValidateParams(*params);
  } catch (const Error& e) {
    reader.Fail(e.what());
  }
  sketch.params = *params;
  std::string_view digest = reader.Field("digest");
  if (digest != "-") sketch.source_digest = std::string(digest);
  if (!ParseUnsigned(reader.Field("normalized_length"),
                     sketch.normalized_length)) {
    reader.Fail("bad normalized_length");
  }
  std::size_t count = 0;
  if (!ParseUnsigned(reader.Field("count"), count)) reader.Fail("bad count");

  sketch.fingerprints.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string_view line = reader.Next();
    HashedGram g;
    std::string_view parts[4];
    for (int p = 0; p < 4; ++p) {
      std::size_t sp = line.find(' ');
      if ((p < 3) == (sp == std::string_view::npos)) {
        reader.Fail("fingerprint needs four fields");
      }
      parts[p] = line.substr(0, sp);
      line = (sp == std::string_view::npos) ? std::string_view{}
                                            : line.substr(sp + 1);
    }
    if (!ParseUnsigned(parts[0], g.hash) || !ParseUnsigned(parts[1], g.offset) ||
        !ParseUnsigned(parts[2], g.line_start) ||
        !ParseUnsigned(parts[3], g.line_end)) {
      reader.Fail("bad fingerprint");
    }
    if (g.hash >= sketch.params.q) reader.Fail("hash out of range");
    if (g.line_start > g.line_end) reader.Fail("line range reversed");
    if (!sketch.fingerprints.empty() &&
        sketch.fingerprints.back().offset >= g.offset) {
      reader.Fail("offsets not strictly increasing");
    }
    sketch.fingerprints.push_back(g);
  }
  reader.Field("checksum");
  if (!reader.AtEnd()) reader.Fail("trailing data after checksum");
  return sketch;
}

void SaveSketch(const Sketch& sketch, const std::filesystem::path& path) {
  internal::WriteFileAtomic(path, SerializeSketch(sketch));
}

Sketch LoadSketch(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kCorruptSketch, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSketch(buf.str(), path.string());
}

}  // namespace codealike
