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

#include "codealike/hasher.hpp"

#include <charconv>
#include <cstdint>

#include "codealike/error.hpp"

namespace codealike {

namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % q);
}

std::uint64_t Byte(char c) {
  return static_cast<unsigned char>(c);
}

// h * base + c (mod q), the step shared by direct and rolling evaluation.
std::uint64_t Append(std::uint64_t h, char c, std::uint64_t base,
                     std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<u128>(h) * base + Byte(c)) % q);
}

}  // namespace

void ValidateParams(const Params& params) {
  if (params.k < 1) {
    throw Error(ErrorCode::kInvalidParams, "k must be >= 1");
  }
  if (params.t < params.k) {
    throw Error(ErrorCode::kInvalidParams,
                "t (" + std::to_string(params.t) + ") must be >= k (" +
                    std::to_string(params.k) + ")");
  }
  if (params.q < 2) throw Error(ErrorCode::kInvalidParams, "q must be >= 2");
  if (params.b < 2) throw Error(ErrorCode::kInvalidParams, "b must be >= 2");
}

std::string FormatParams(const Params& params) {
  return "k=" + std::to_string(params.k) + " t=" + std::to_string(params.t) +
         " q=" + std::to_string(params.q) + " b=" + std::to_string(params.b);
}

std::optional<Params> ParseParams(std::string_view text) {
  Params params;
  bool seen[4] = {false, false, false, false};
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end;
    if (item.size() < 3 || item[1] != '=') return std::nullopt;
    std::uint64_t value = 0;
    const char* first = item.data() + 2;
    const char* last = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    int slot = -1;
    switch (item[0]) {
      case 'k': slot = 0; break;
      case 't': slot = 1; break;
      case 'q': slot = 2; break;
      case 'b': slot = 3; break;
      default: return std::nullopt;
    }
    if (seen[slot]) return std::nullopt;
    seen[slot] = true;
    if (slot < 2 && value > UINT32_MAX) return std::nullopt;
    switch (slot) {
      case 0: params.k = static_cast<std::uint32_t>(value); break;
      case 1: params.t = static_cast<std::uint32_t>(value); break;
      case 2: params.q = value; break;
      default: params.b = value; break;
    }
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) return std::nullopt;
  return params;
}

std::uint64_t HashOne(std::string_view gram, const Params& params) {
  if (gram.size() != params.k) {
    throw Error(ErrorCode::kLengthMismatch,
                "gram of length " + std::to_string(gram.size()) +
                    " but k=" + std::to_string(params.k));
  }
  if (params.q == 0) throw Error(ErrorCode::kInvalidParams, "q must be >= 1");
  const std::uint64_t base = params.b % params.q;
  std::uint64_t h = 0;
  for (char c : gram) h = Append(h, c, base, params.q);
  return h;
}

std::vector<HashedGram> KgramHashes(const NormalizedText& text,
                                    const Params& params) {
  ValidateParams(params);
  const std::string& bytes = text.bytes;
  const std::size_t k = params.k;
  std::vector<HashedGram> grams;
  if (bytes.size() < k) return grams;

  const std::uint64_t q = params.q;
  const std::uint64_t base = params.b % q;
  // b^(k-1) mod q, the weight of the byte leaving the window.
  std::uint64_t lead_weight = 1;
  for (std::size_t i = 1; i < k; ++i) lead_weight = MulMod(lead_weight, base, q);

  std::uint64_t h = 0;
  for (std::size_t i = 0; i < k; ++i) {
    h = Append(h, bytes[i], base, q);
  }

  const std::size_t count = bytes.size() - k + 1;
  grams.reserve(count);
  for (std::size_t i = 0;; ++i) {
    grams.push_back({h, i, text.line_of[i], text.line_of[i + k - 1]});
    if (i + 1 == count) break;
    // Subtract in [0, q) so the result never goes negative.
    const std::uint64_t leaving = MulMod(Byte(bytes[i]) % q, lead_weight, q);
    h = static_cast<std::uint64_t>((static_cast<u128>(h) + q - leaving) % q);
    h = Append(h, bytes[i + k], base, q);
  }
  return grams;
}

}  // namespace codealike
