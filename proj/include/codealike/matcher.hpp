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

#ifndef CODEALIKE_MATCHER_HPP_
#define CODEALIKE_MATCHER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codealike/hasher.hpp"
#include "codealike/winnower.hpp"

namespace codealike {

// Inclusive, 1-based.
struct LineRange {
  std::uint32_t start = 0;
  std::uint32_t end = 0;

  friend bool operator==(const LineRange&, const LineRange&) = default;
  friend auto operator<=>(const LineRange&, const LineRange&) = default;
};

// One shared fingerprint location: where it sits in each document.
struct Occurrence {
  LineRange primary;
  LineRange candidate;
};

struct MatchSpan {
  LineRange primary_lines;
  LineRange candidate_lines;
  std::size_t shared_count = 0;

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

struct MatchResult {
  std::string primary_id;
  std::string candidate_id;
  std::size_t shared_fingerprints = 0;  // distinct hash values
  double containment = 0.0;
  double jaccard = 0.0;
  std::vector<MatchSpan> spans;  // ordered by candidate_lines

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

struct ComparisonReport {
  std::string primary_id;
  std::optional<std::string> generated_at;
  Params params;
  std::vector<MatchResult> results;
  std::vector<std::string> primary_source_lines;
  // Only candidates with at least one span.
  std::map<std::string, std::vector<std::string>> candidate_source_lines;

  friend bool operator==(const ComparisonReport&,
                         const ComparisonReport&) = default;
};

inline constexpr std::uint32_t kDefaultMergeGap = 1;

// Two occurrences merge when, on both the candidate and the primary side,
// one range starts no later than `gap` lines after the other ends: gap 0
// merges overlapping ranges, gap 1 also merges adjacent ones. Output is
// sorted by candidate range. Candidate ranges can only overlap when the same
// candidate lines match two distant places in the primary.
std::vector<MatchSpan> MergeSpans(std::span<const Occurrence> occurrences,
                                  std::uint32_t gap = kDefaultMergeGap);

// Throws Error(kParamsMismatch) when params or format versions differ.
MatchResult Compare(const Sketch& primary, const Sketch& candidate,
                    std::uint32_t gap = kDefaultMergeGap);

// Compares primary against every candidate whose source_id differs from the
// primary's. Results are ordered by containment desc, jaccard desc, then
// candidate_id asc. Source lines and generated_at are left for the caller.
ComparisonReport CheckPrimary(const Sketch& primary,
                              std::span<const Sketch> candidates,
                              std::uint32_t gap = kDefaultMergeGap);

}  // namespace codealike

#endif  // CODEALIKE_MATCHER_HPP_
