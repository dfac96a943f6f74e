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

#ifndef CODEALIKE_HASHER_HPP_
#define CODEALIKE_HASHER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codealike/normalize.hpp"

namespace codealike {

// Fingerprinting parameters. k is the noise threshold (k-gram length), t the
// guarantee threshold, q the hash modulus and b the polynomial base.
struct Params {
  std::uint32_t k = 5;
  std::uint32_t t = 8;
  std::uint64_t q = 10001;
  std::uint64_t b = 256;

  // Number of consecutive grams per winnowing window.
  std::uint32_t window() const { return t - k + 1; }

  friend bool operator==(const Params&, const Params&) = default;
};

// Throws Error(kInvalidParams) unless t >= k >= 1, q >= 2 and b >= 2.
void ValidateParams(const Params& params);

std::string FormatParams(const Params& params);  // "k=5 t=8 q=10001 b=256"

// Inverse of FormatParams; nullopt unless all four keys appear exactly once.
// The result is not validated.
std::optional<Params> ParseParams(std::string_view text);

struct HashedGram {
  std::uint64_t hash = 0;
  std::size_t offset = 0;
  std::uint32_t line_start = 0;
  std::uint32_t line_end = 0;

  friend bool operator==(const HashedGram&, const HashedGram&) = default;
};

// Direct evaluation of sum(gram[j] * b^(k-1-j)) mod q. Only the gram length
// is checked against params.k, so q = 1 is accepted here.
// Throws Error(kLengthMismatch).
std::uint64_t HashOne(std::string_view gram, const Params& params);

// Rolling hashes of every k-gram, in offset order. Empty when the text is
// shorter than k.
std::vector<HashedGram> KgramHashes(const NormalizedText& text,
                                    const Params& params);

}  // namespace codealike

#endif  // CODEALIKE_HASHER_HPP_
