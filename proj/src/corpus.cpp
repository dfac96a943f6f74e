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

#include "codealike/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <stdexcept>

#include "codealike/digest.hpp"
#include "codealike/error.hpp"
#include "codealike/language_config.hpp"
#include "codealike/normalize.hpp"
#include "store_util.hpp"

namespace codealike {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kStoreFile = "store.conf";
constexpr std::string_view kStoreMagic = "codealike-store 1";
constexpr std::string_view kManifestFile = "manifest.tsv";
constexpr std::string_view kManifestHeader = "# codealike-manifest 1";
constexpr std::string_view kLockFile = ".lock";

// Store paths are built from user-supplied ids, so each path component must
// be a plain name.
void CheckComponent(std::string_view what, std::string_view component) {
  if (component.empty() || component == "." || component == ".." ||
      component.find('/') != std::string_view::npos ||
      std::any_of(component.begin(), component.end(),
                  [](char c) { return static_cast<unsigned char>(c) < 0x20; })) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" +
                                std::string(component) + "'");
  }
}

void CheckDocName(std::string_view name) {
  std::size_t pos = 0;
  while (true) {
    std::size_t slash = name.find('/', pos);
    CheckComponent("document name", name.substr(pos, slash - pos));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
}

// Manifest fields are tab separated; escape the few bytes that would break
// the line structure.
std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string Unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(s[i]);
    }
  }
  return out;
}

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path AssignmentDir(const fs::path& root, const std::string& class_id,
                       const std::string& assignment_id) {
  return root / class_id / assignment_id;
}

std::vector<DocumentRecord> ReadManifest(const fs::path& dir,
                                         const std::string& class_id,
                                         const std::string& assignment_id) {
  std::vector<DocumentRecord> records;
  std::optional<std::string> text = internal::ReadFile(dir / kManifestFile);
  if (!text) return records;

  std::string_view rest = *text;
  bool first = true;
  while (!rest.empty()) {
    std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = (nl == std::string_view::npos) ? std::string_view{}
                                          : rest.substr(nl + 1);
    if (first) {
      if (line != kManifestHeader) {
        throw Error(ErrorCode::kCorruptSketch,
                    (dir / kManifestFile).string() + ": unknown manifest header");
      }
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      fields.push_back(Unescape(line.substr(pos, tab - pos)));
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 6) {
      throw Error(ErrorCode::kCorruptSketch,
                  (dir / kManifestFile).string() + ": bad record");
    }
    records.push_back({fields[0], class_id, assignment_id, fields[1], fields[2],
                       fields[3], fields[4], fields[5]});
  }
  return records;
}

void WriteManifest(const fs::path& dir, std::vector<DocumentRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const DocumentRecord& a, const DocumentRecord& b) {
              return a.doc_id < b.doc_id;
            });
  std::string out(kManifestHeader);
  out += '\n';
  for (const DocumentRecord& r : records) {
    out += Escape(r.doc_id) + '\t' + Escape(r.language) + '\t' +
           Escape(r.sketch_path) + '\t' + Escape(r.source_digest) + '\t' +
           Escape(r.indexed_at) + '\t' + Escape(r.source_path) + '\n';
  }
  internal::WriteFileAtomic(dir / kManifestFile, out);
}

std::vector<std::string> SubdirNames(const fs::path& dir) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_directory(ec)) names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

bool StoreInitialized(const fs::path& root) {
  std::error_code ec;
  return fs::is_regular_file(root / kStoreFile, ec);
}

Params ReadStoreParams(const fs::path& root) {
  std::optional<std::string> text = internal::ReadFile(root / kStoreFile);
  if (!text) {
    throw Error(ErrorCode::kStoreNotInitialized,
                "no sketch store at " + root.string());
  }
  const std::string prefix = std::string(kStoreMagic) + "\nparams ";
  std::optional<Params> params;
  if (text->compare(0, prefix.size(), prefix) == 0) {
    std::string_view line = std::string_view(*text).substr(prefix.size());
    params = ParseParams(line.substr(0, line.find('\n')));
  }
  if (!params) {
    throw Error(ErrorCode::kCorruptSketch,
                (root / kStoreFile).string() + ": unreadable store header");
  }
  return *params;
}

void InitStore(const fs::path& root, const Params& params) {
  ValidateParams(params);
  internal::FileLock lock(root / kLockFile);
  if (StoreInitialized(root)) {
    const Params existing = ReadStoreParams(root);
    if (existing != params) {
      throw Error(ErrorCode::kParamsMismatch,
                  "store " + root.string() + " uses " + FormatParams(existing) +
                      ", requested " + FormatParams(params));
    }
    return;
  }
  internal::WriteFileAtomic(root / kStoreFile, std::string(kStoreMagic) +
                                                   "\nparams " +
                                                   FormatParams(params) + "\n");
}

std::string DefaultDocName(const fs::path& source_path) {
  std::error_code ec;
  const fs::path absolute = fs::absolute(source_path, ec).lexically_normal();
  const fs::path cwd = fs::current_path(ec);
  fs::path rel = absolute.lexically_relative(cwd);
  if (ec || rel.empty() || *rel.begin() == "..") rel = absolute.filename();
  return rel.generic_string();
}

DocumentRecord IndexDocument(const fs::path& source_path,
                             const std::string& class_id,
                             const std::string& assignment_id,
                             const std::string& language, const Params& params,
                             const fs::path& store_root,
                             std::optional<std::string> doc_name) {
  CheckComponent("class id", class_id);
  CheckComponent("assignment id", assignment_id);
  const std::string name = doc_name ? *doc_name : DefaultDocName(source_path);
  CheckDocName(name);

  std::optional<std::string> raw = internal::ReadFile(source_path);
  std::error_code ec;
  if (!raw || !fs::is_regular_file(source_path, ec)) {
    throw Error(ErrorCode::kSourceUnreadable,
                "cannot read " + source_path.string());
  }
  const LanguageConfig config = ResolveLanguage(language);
  InitStore(store_root, params);

  DocumentRecord record;
  record.doc_id = class_id + "/" + assignment_id + "/" + name;
  record.class_id = class_id;
  record.assignment_id = assignment_id;
  record.language = language;
  record.sketch_path = record.doc_id + ".sketch";
  record.source_digest = ContentDigest(*raw);
  record.source_path = source_path.string();

  const fs::path dir = AssignmentDir(store_root, class_id, assignment_id);
  internal::FileLock lock(dir / kLockFile);
  std::vector<DocumentRecord> records =
      ReadManifest(dir, class_id, assignment_id);
  auto existing = std::find_if(records.begin(), records.end(),
                               [&](const DocumentRecord& r) {
                                 return r.doc_id == record.doc_id;
                               });
  if (existing != records.end() &&
      existing->source_digest == record.source_digest &&
      existing->language == record.language) {
    try {
      if (LoadRecordSketch(*existing, store_root).params == params) {
        return *existing;
      }
    } catch (const Error&) {
      // Damaged sketch: fall through and rebuild it.
    }
  }

  NormalizedText text = NormalizeFor(*raw, config, record.doc_id);
  Sketch sketch = FingerprintDocument(text, params);
  sketch.source_digest = record.source_digest;
  record.indexed_at = UtcNow();

  SaveSketch(sketch, store_root / record.sketch_path);
  internal::WriteFileAtomic(store_root / (record.doc_id + ".source"), *raw);
  if (existing != records.end()) {
    *existing = record;
  } else {
    records.push_back(record);
  }
  WriteManifest(dir, std::move(records));
  return record;
}

std::vector<DocumentRecord> ListCorpus(
    const fs::path& store_root, const std::optional<std::string>& class_id,
    const std::optional<std::string>& assignment_id) {
  if (!StoreInitialized(store_root)) {
    throw Error(ErrorCode::kStoreNotInitialized,
                "no sketch store at " + store_root.string());
  }
  std::vector<DocumentRecord> out;
  for (const std::string& cls : SubdirNames(store_root)) {
    if (class_id && cls != *class_id) continue;
    for (const std::string& asg : SubdirNames(store_root / cls)) {
      if (assignment_id && asg != *assignment_id) continue;
      std::vector<DocumentRecord> records =
          ReadManifest(AssignmentDir(store_root, cls, asg), cls, asg);
      out.insert(out.end(), records.begin(), records.end());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DocumentRecord& a, const DocumentRecord& b) {
              return a.doc_id < b.doc_id;
            });
  return out;
}

std::optional<DocumentRecord> FindRecord(const fs::path& store_root,
                                         const std::string& doc_id) {
  const std::size_t first = doc_id.find('/');
  const std::size_t second =
      first == std::string::npos ? first : doc_id.find('/', first + 1);
  if (second == std::string::npos) return std::nullopt;
  const std::string cls = doc_id.substr(0, first);
  const std::string asg = doc_id.substr(first + 1, second - first - 1);
  for (DocumentRecord& r :
       ReadManifest(AssignmentDir(store_root, cls, asg), cls, asg)) {
    if (r.doc_id == doc_id) return r;
  }
  return std::nullopt;
}

Sketch LoadRecordSketch(const DocumentRecord& record, const fs::path& store_root) {
  Sketch sketch = LoadSketch(store_root / record.sketch_path);
  if (sketch.source_id != record.doc_id ||
      sketch.source_digest != record.source_digest) {
    throw Error(ErrorCode::kCorruptSketch,
                record.sketch_path + " does not belong to record " +
                    record.doc_id);
  }
  return sketch;
}

std::string LoadRecordSource(const DocumentRecord& record,
                             const fs::path& store_root) {
  std::optional<std::string> text =
      internal::ReadFile(store_root / (record.doc_id + ".source"));
  if (!text) {
    throw Error(ErrorCode::kSourceUnreadable,
                "missing stored source for " + record.doc_id);
  }
  return *text;
}

}  // namespace codealike
