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

#ifndef CODEALIKE_WINNOWER_HPP_
#define CODEALIKE_WINNOWER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "codealike/hasher.hpp"
#include "codealike/normalize.hpp"

namespace codealike {

// Bumped whenever hashing, winnowing or the sketch file layout changes.
inline constexpr int kSketchFormatVersion = 1;

struct Sketch {
  std::string source_id;
  Params params;
  int format_version = kSketchFormatVersion;
  std::vector<HashedGram> fingerprints;  // offset order, unique offsets
  std::size_t normalized_length = 0;
  // Digest of the raw source ("sha256:<hex>"), empty when unknown.
  std::string source_digest;

  friend bool operator==(const Sketch&, const Sketch&) = default;
};

// Robust winnowing over windows of params.window() grams. Each window picks
// its minimum hash; the previous pick is kept while it is still in the
// window and minimal, otherwise the rightmost minimum is taken. Sequences
// shorter than one window keep every gram.
Sketch Winnow(std::span<const HashedGram> grams, const Params& params);

Sketch FingerprintDocument(const NormalizedText& text, const Params& params);

}  // namespace codealike

#endif  // CODEALIKE_WINNOWER_HPP_
