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

#include "codealike/matcher.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "codealike/error.hpp"

namespace codealike {

namespace {

struct Located {
  std::uint64_t hash;
  LineRange lines;

  friend auto operator<=>(const Located&, const Located&) = default;
};

// Fingerprint locations sorted by hash, with the number of distinct hashes.
struct LocationIndex {
  std::vector<Located> entries;
  std::size_t distinct = 0;
};

LocationIndex IndexByHash(const Sketch& sketch) {
  LocationIndex index;
  index.entries.reserve(sketch.fingerprints.size());
  for (const HashedGram& g : sketch.fingerprints) {
    index.entries.push_back({g.hash, {g.line_start, g.line_end}});
  }
  std::sort(index.entries.begin(), index.entries.end());
  for (std::size_t i = 0; i < index.entries.size(); ++i) {
    if (i == 0 || index.entries[i].hash != index.entries[i - 1].hash) {
      ++index.distinct;
    }
  }
  return index;
}

bool Close(const LineRange& a, const LineRange& b, std::uint32_t gap) {
  return static_cast<std::uint64_t>(a.start) <=
             static_cast<std::uint64_t>(b.end) + gap &&
         static_cast<std::uint64_t>(b.start) <=
             static_cast<std::uint64_t>(a.end) + gap;
}

LineRange Hull(const LineRange& a, const LineRange& b) {
  return {std::min(a.start, b.start), std::max(a.end, b.end)};
}

void CheckCompatible(const Sketch& primary, const Sketch& candidate) {
  if (primary.params != candidate.params ||
      primary.format_version != candidate.format_version) {
    throw Error(ErrorCode::kParamsMismatch,
                "'" + candidate.source_id + "' was built with " +
                    FormatParams(candidate.params) + " (format " +
                    std::to_string(candidate.format_version) + ") but '" +
                    primary.source_id + "' with " +
                    FormatParams(primary.params) + " (format " +
                    std::to_string(primary.format_version) + ")");
  }
}

}  // namespace

std::vector<MatchSpan> MergeSpans(std::span<const Occurrence> occurrences,
                                  std::uint32_t gap) {
  // Candidate range, then primary range, packed into one sortable key.
  using Key = unsigned __int128;
  std::vector<Key> keys;
  keys.reserve(occurrences.size());
  for (const Occurrence& o : occurrences) {
    keys.push_back(static_cast<Key>(o.candidate.start) << 96 |
                   static_cast<Key>(o.candidate.end) << 64 |
                   static_cast<Key>(o.primary.start) << 32 | o.primary.end);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Occurrence> sorted;
  sorted.reserve(keys.size());
  for (Key k : keys) {
    sorted.push_back({{static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k)},
                      {static_cast<std::uint32_t>(k >> 96),
                       static_cast<std::uint32_t>(k >> 64)}});
  }

  auto mergeable = [gap](const MatchSpan& a, const MatchSpan& b) {
    return Close(a.candidate_lines, b.candidate_lines, gap) &&
           Close(a.primary_lines, b.primary_lines, gap);
  };
  auto absorb = [](MatchSpan& into, const MatchSpan& from) {
    into.candidate_lines = Hull(into.candidate_lines, from.candidate_lines);
    into.primary_lines = Hull(into.primary_lines, from.primary_lines);
    into.shared_count += from.shared_count;
  };

  // Sweep in candidate order. Active spans are all within `gap` of the
  // current candidate line, so their primary ranges are pairwise more than
  // `gap` apart; keying them by primary start keeps them sorted by end too.
  // A span whose candidate end is more than `gap` lines behind the current
  // start cannot take any later occurrence, so it is retired.
  std::vector<MatchSpan> spans;
  std::map<std::uint32_t, MatchSpan> active;
  std::optional<std::uint32_t> swept_to;
  for (const Occurrence& occ : sorted) {
    if (swept_to != occ.candidate.start) {
      for (auto it = active.begin(); it != active.end();) {
        if (static_cast<std::uint64_t>(it->second.candidate_lines.end) + gap <
            occ.candidate.start) {
          spans.push_back(it->second);
          it = active.erase(it);
        } else {
          ++it;
        }
      }
      swept_to = occ.candidate.start;
    }
    MatchSpan current{occ.primary, occ.candidate, 1};
    for (bool absorbed = true; absorbed;) {
      absorbed = false;
      const std::uint64_t reach =
          static_cast<std::uint64_t>(current.primary_lines.end) + gap;
      auto it = active.upper_bound(static_cast<std::uint32_t>(
          std::min<std::uint64_t>(reach, UINT32_MAX)));
      if (reach >= UINT32_MAX) it = active.end();
      while (it != active.begin()) {
        --it;
        if (static_cast<std::uint64_t>(it->second.primary_lines.end) + gap <
            current.primary_lines.start) {
          break;
        }
        if (mergeable(it->second, current)) {
          absorb(current, it->second);
          active.erase(it);
          absorbed = true;
          break;
        }
      }
    }
    active.emplace(current.primary_lines.start, current);
  }
  for (const auto& [unused, span] : active) spans.push_back(span);

  // A retired span can become mergeable with one that grew on the primary
  // side afterwards; close the remaining pairs.
  auto by_candidate = [](const MatchSpan& a, const MatchSpan& b) {
    return std::tie(a.candidate_lines, a.primary_lines) <
           std::tie(b.candidate_lines, b.primary_lines);
  };
  std::vector<bool> dead;
  for (bool merged = true; merged;) {
    merged = false;
    std::sort(spans.begin(), spans.end(), by_candidate);
    dead.assign(spans.size(), false);
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < spans.size(); ++j) {
        if (static_cast<std::uint64_t>(spans[i].candidate_lines.end) + gap <
            spans[j].candidate_lines.start) {
          break;
        }
        if (!dead[j] && mergeable(spans[i], spans[j])) {
          absorb(spans[i], spans[j]);
          dead[j] = true;
          merged = true;
          j = i;  // spans[i] grew: rescan its neighbours
        }
      }
    }
    std::size_t kept = 0;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (!dead[i]) spans[kept++] = spans[i];
    }
    spans.resize(kept);
  }
  return spans;
}

namespace {

MatchResult CompareIndexed(const Sketch& primary, const LocationIndex& in_primary,
                           const Sketch& candidate, std::uint32_t gap) {
  const LocationIndex in_candidate = IndexByHash(candidate);

  // Walk both hash-sorted lists together; every shared hash contributes the
  // cross product of its locations.
  std::size_t shared = 0;
  std::vector<Occurrence> occurrences;
  const std::vector<Located>& a = in_primary.entries;
  const std::vector<Located>& b = in_candidate.entries;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hash < b[j].hash) {
      ++i;
    } else if (b[j].hash < a[i].hash) {
      ++j;
    } else {
      const std::uint64_t hash = a[i].hash;
      std::size_t i_end = i;
      std::size_t j_end = j;
      while (i_end < a.size() && a[i_end].hash == hash) ++i_end;
      while (j_end < b.size() && b[j_end].hash == hash) ++j_end;
      for (std::size_t x = i; x < i_end; ++x) {
        for (std::size_t y = j; y < j_end; ++y) {
          occurrences.push_back({a[x].lines, b[y].lines});
        }
      }
      ++shared;
      i = i_end;
      j = j_end;
    }
  }

  MatchResult result;
  result.primary_id = primary.source_id;
  result.candidate_id = candidate.source_id;
  result.shared_fingerprints = shared;
  if (in_primary.distinct != 0) {
    result.containment =
        static_cast<double>(shared) / static_cast<double>(in_primary.distinct);
  }
  const std::size_t unioned = in_primary.distinct + in_candidate.distinct - shared;
  if (unioned != 0) {
    result.jaccard = static_cast<double>(shared) / static_cast<double>(unioned);
  }
  result.spans = MergeSpans(occurrences, gap);
  return result;
}

}  // namespace

MatchResult Compare(const Sketch& primary, const Sketch& candidate,
                    std::uint32_t gap) {
  CheckCompatible(primary, candidate);
  return CompareIndexed(primary, IndexByHash(primary), candidate, gap);
}

ComparisonReport CheckPrimary(const Sketch& primary,
                              std::span<const Sketch> candidates,
                              std::uint32_t gap) {
  for (const Sketch& candidate : candidates) {
    if (candidate.source_id != primary.source_id) {
      CheckCompatible(primary, candidate);
    }
  }

  ComparisonReport report;
  report.primary_id = primary.source_id;
  report.params = primary.params;
  const LocationIndex in_primary = IndexByHash(primary);
  for (const Sketch& candidate : candidates) {
    if (candidate.source_id == primary.source_id) continue;
    report.results.push_back(CompareIndexed(primary, in_primary, candidate, gap));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const MatchResult& a, const MatchResult& b) {
              if (a.containment != b.containment) {
                return a.containment > b.containment;
              }
              if (a.jaccard != b.jaccard) return a.jaccard > b.jaccard;
              return a.candidate_id < b.candidate_id;
            });
  return report;
}

}  // namespace codealike
