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

#include "codealike/error.hpp"

namespace codealike {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedConfig: return "MalformedConfig";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kParamsMismatch: return "ParamsMismatch";
    case ErrorCode::kSourceUnreadable: return "SourceUnreadable";
    case ErrorCode::kUnknownLanguage: return "UnknownLanguage";
    case ErrorCode::kStoreWriteFailed: return "StoreWriteFailed";
    case ErrorCode::kStoreNotInitialized: return "StoreNotInitialized";
    case ErrorCode::kCorruptSketch: return "CorruptSketch";
  }
  return "Error";
}

}  // namespace codealike
