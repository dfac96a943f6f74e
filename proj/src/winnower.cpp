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

#include "codealike/winnower.hpp"

#include <deque>

namespace codealike {

Sketch Winnow(std::span<const HashedGram> grams, const Params& params) {
  ValidateParams(params);
  Sketch sketch;
  sketch.params = params;
  if (!grams.empty()) sketch.normalized_length = grams.back().offset + params.k;

  const std::size_t n = grams.size();
  const std::size_t w = params.window();
  if (n < w) {
    sketch.fingerprints.assign(grams.begin(), grams.end());
    return sketch;
  }

  // Indices with strictly increasing hashes; the front is the rightmost
  // minimum of the current window.
  std::deque<std::size_t> ascending;
  std::size_t selected = n;  // n means "none yet"
  for (std::size_t right = 0; right < n; ++right) {
    while (!ascending.empty() &&
           grams[ascending.back()].hash >= grams[right].hash) {
      ascending.pop_back();
    }
    ascending.push_back(right);
    if (right + 1 < w) continue;

    const std::size_t left = right + 1 - w;
    while (ascending.front() < left) ascending.pop_front();

    const std::uint64_t minimum = grams[ascending.front()].hash;
    if (selected != n && selected >= left && grams[selected].hash == minimum) {
      continue;
    }
    selected = ascending.front();
    if (!sketch.fingerprints.empty() &&
        sketch.fingerprints.back().offset == grams[selected].offset) {
      continue;
    }
    sketch.fingerprints.push_back(grams[selected]);
  }
  return sketch;
}

Sketch FingerprintDocument(const NormalizedText& text, const Params& params) {
  const std::vector<HashedGram> grams = KgramHashes(text, params);
  Sketch sketch = Winnow(grams, params);
  sketch.source_id = text.source_id;
  sketch.normalized_length = text.bytes.size();
  return sketch;
}

}  // namespace codealike
