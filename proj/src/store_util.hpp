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

#ifndef CODEALIKE_SRC_STORE_UTIL_HPP_
#define CODEALIKE_SRC_STORE_UTIL_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace codealike::internal {

// Writes to a sibling temporary file, flushes it and renames it over
// `path`. Parent directories are created. Throws Error(kStoreWriteFailed).
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

// nullopt when the file cannot be opened.
std::optional<std::string> ReadFile(const std::filesystem::path& path);

// Exclusive advisory flock held for the lifetime of the object.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace codealike::internal

#endif  // CODEALIKE_SRC_STORE_UTIL_HPP_
