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

// On-disk sketch store.
//
//   <root>/store.conf                          params shared by every sketch
//   <root>/<class>/<assignment>/manifest.tsv   one record per document
//   <root>/<class>/<assignment>/<name>.sketch  winnowed fingerprints
//   <root>/<class>/<assignment>/<name>.source  copy of the indexed text
//
// Every file is written to a temporary name and renamed into place. Manifest
// updates hold an advisory flock on <assignment>/.lock.

#ifndef CODEALIKE_CORPUS_HPP_
#define CODEALIKE_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codealike/hasher.hpp"
#include "codealike/winnower.hpp"

namespace codealike {

// ---- Sketch files ---------------------------------------------------------

std::string SerializeSketch(const Sketch& sketch);

// Throws Error(kCorruptSketch) on checksum, version or syntax failures.
Sketch ParseSketch(std::string_view text, std::string_view origin = "<memory>");

void SaveSketch(const Sketch& sketch, const std::filesystem::path& path);
Sketch LoadSketch(const std::filesystem::path& path);

// ---- Store ----------------------------------------------------------------

struct DocumentRecord {
  std::string doc_id;  // "<class>/<assignment>/<name>"
  std::string class_id;
  std::string assignment_id;
  std::string language;
  std::string sketch_path;  // relative to the store root
  std::string source_digest;
  std::string indexed_at;   // UTC, ISO-8601
  std::string source_path;  // as given at index time

  friend bool operator==(const DocumentRecord&,
                         const DocumentRecord&) = default;
};

inline constexpr std::string_view kStoreEnvVar = "CODEALIKE_STORE";

bool StoreInitialized(const std::filesystem::path& root);

// Creates the store if absent. Throws Error(kParamsMismatch) when an
// existing store was created with different params.
void InitStore(const std::filesystem::path& root, const Params& params);

// Throws Error(kStoreNotInitialized).
Params ReadStoreParams(const std::filesystem::path& root);

// Name a source file gets inside its assignment: the path relative to the
// working directory when the file lives below it, else the file name.
std::string DefaultDocName(const std::filesystem::path& source_path);

// Normalizes, fingerprints and stores one file. Re-indexing a file whose
// digest, language and params are unchanged returns the existing record and
// writes nothing. `doc_name` defaults to DefaultDocName(source_path).
// Throws Error(kSourceUnreadable | kUnknownLanguage | kStoreWriteFailed |
// kParamsMismatch).
DocumentRecord IndexDocument(const std::filesystem::path& source_path,
                             const std::string& class_id,
                             const std::string& assignment_id,
                             const std::string& language, const Params& params,
                             const std::filesystem::path& store_root,
                             std::optional<std::string> doc_name = {});

// Sorted by doc_id. Unknown class or assignment yields an empty list.
// Throws Error(kStoreNotInitialized).
std::vector<DocumentRecord> ListCorpus(
    const std::filesystem::path& store_root,
    const std::optional<std::string>& class_id = {},
    const std::optional<std::string>& assignment_id = {});

std::optional<DocumentRecord> FindRecord(const std::filesystem::path& store_root,
                                         const std::string& doc_id);

Sketch LoadRecordSketch(const DocumentRecord& record,
                        const std::filesystem::path& store_root);

// The text captured at index time.
std::string LoadRecordSource(const DocumentRecord& record,
                             const std::filesystem::path& store_root);

}  // namespace codealike

#endif  // CODEALIKE_CORPUS_HPP_
