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

#ifndef CODEALIKE_ERROR_HPP_
#define CODEALIKE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace codealike {

enum class ErrorCode {
  kMalformedConfig,
  kInvalidConfig,
  kInvalidParams,
  kLengthMismatch,
  kParamsMismatch,
  kSourceUnreadable,
  kUnknownLanguage,
  kStoreWriteFailed,
  kStoreNotInitialized,
  kCorruptSketch,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as an Error carrying a code, so callers
// (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace codealike

#endif  // CODEALIKE_ERROR_HPP_
