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

#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "codealike/error.hpp"
#include "codealike/language_config.hpp"
#include "test_util.hpp"

namespace codealike {
namespace {

using testing::MakeText;

Sketch SketchOf(const std::string& bytes, const std::string& id,
                const Params& p = Params{}) {
  return FingerprintDocument(MakeText(bytes, id, true), p);
}

Occurrence SameLine(std::uint32_t line) { return {{line, line}, {line, line}}; }

TEST(MergeSpansTest, OverlappingRangesMerge) {
  const std::vector<Occurrence> occ = {{{10, 11}, {4, 5}}, {{11, 13}, {5, 7}}};
  const auto spans = MergeSpans(occ, 1);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].candidate_lines, (LineRange{4, 7}));
  EXPECT_EQ(spans[0].primary_lines, (LineRange{10, 13}));
  EXPECT_EQ(spans[0].shared_count, 2u);
}

TEST(MergeSpansTest, DistantRangesStayApart) {
  const std::vector<Occurrence> occ = {SameLine(2), SameLine(10)};
  EXPECT_EQ(MergeSpans(occ, 1).size(), 2u);
}

TEST(MergeSpansTest, GapControlsAdjacency) {
  const std::vector<Occurrence> occ = {SameLine(2), SameLine(3)};
  EXPECT_EQ(MergeSpans(occ, 0).size(), 2u);
  EXPECT_EQ(MergeSpans(occ, 1).size(), 1u);
}

TEST(MergeSpansTest, PrimarySideMustAlsoBeClose) {
  // Same candidate lines matching two far-apart primary passages.
  const std::vector<Occurrence> occ = {{{3, 3}, {5, 5}}, {{40, 40}, {5, 5}}};
  const auto spans = MergeSpans(occ, 1);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].primary_lines, (LineRange{3, 3}));
  EXPECT_EQ(spans[1].primary_lines, (LineRange{40, 40}));
}

TEST(MergeSpansTest, TransitiveChainsCollapse) {
  // Only becomes one span once the middle occurrence bridges both ends.
  const std::vector<Occurrence> occ = {
      {{1, 1}, {1, 1}}, {{20, 20}, {1, 2}}, {{2, 19}, {2, 2}}};
  const auto spans = MergeSpans(occ, 1);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].primary_lines, (LineRange{1, 20}));
  EXPECT_EQ(spans[0].shared_count, 3u);
}

class MergeSpansPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(MergeSpansPropertyTest, CoversExactlyTheUnion) {
  std::mt19937_64 rng(GetParam());
  std::vector<Occurrence> occ;
  std::set<std::uint32_t> expected;
  for (int i = 0; i < 50; ++i) {
    const auto line = static_cast<std::uint32_t>(testing::Uniform(rng, 1, 120));
    occ.push_back(SameLine(line));
    expected.insert(line);
  }
  const auto spans = MergeSpans(occ, 1);

  std::set<std::uint32_t> covered;
  std::size_t total = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::uint32_t l = spans[i].candidate_lines.start;
         l <= spans[i].candidate_lines.end; ++l) {
      EXPECT_TRUE(covered.insert(l).second) << "overlap at " << l;
    }
    total += spans[i].shared_count;
    if (i > 0) {
      // Maximal: neighbours are separated by at least one uncovered line.
      EXPECT_GT(spans[i].candidate_lines.start, spans[i - 1].candidate_lines.end + 1);
    }
  }
  EXPECT_EQ(covered, expected);
  EXPECT_EQ(total, occ.size());
}


// Merging by definition: start from one span per occurrence and merge any
// pair that is close on both sides until none is.
std::vector<MatchSpan> NaiveMerge(const std::vector<Occurrence>& occ,
                                  std::uint32_t gap) {
  auto close = [gap](const LineRange& a, const LineRange& b) {
    return a.start <= b.end + gap && b.start <= a.end + gap;
  };
  std::vector<MatchSpan> spans;
  for (const Occurrence& o : occ) spans.push_back({o.primary, o.candidate, 1});
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < spans.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < spans.size() && !merged; ++j) {
        if (close(spans[i].primary_lines, spans[j].primary_lines) &&
            close(spans[i].candidate_lines, spans[j].candidate_lines)) {
          spans[i].primary_lines = {
              std::min(spans[i].primary_lines.start, spans[j].primary_lines.start),
              std::max(spans[i].primary_lines.end, spans[j].primary_lines.end)};
          spans[i].candidate_lines = {
              std::min(spans[i].candidate_lines.start, spans[j].candidate_lines.start),
              std::max(spans[i].candidate_lines.end, spans[j].candidate_lines.end)};
          spans[i].shared_count += spans[j].shared_count;
          spans.erase(spans.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  return spans;
}

std::vector<std::tuple<LineRange, LineRange, std::size_t>> Canonical(
    const std::vector<MatchSpan>& spans) {
  std::vector<std::tuple<LineRange, LineRange, std::size_t>> out;
  for (const MatchSpan& s : spans) {
    out.emplace_back(s.candidate_lines, s.primary_lines, s.shared_count);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST_P(MergeSpansPropertyTest, AgreesWithNaiveMerge) {
  std::mt19937_64 rng(1000 + GetParam());
  const auto lines = static_cast<std::uint32_t>(testing::Uniform(rng, 5, 80));
  const auto gap = static_cast<std::uint32_t>(testing::Uniform(rng, 0, 3));
  std::vector<Occurrence> occ(testing::Uniform(rng, 0, 150));
  for (Occurrence& o : occ) {
    auto range = [&] {
      const auto start = static_cast<std::uint32_t>(testing::Uniform(rng, 1, lines));
      return LineRange{start, start + static_cast<std::uint32_t>(
                                          testing::Uniform(rng, 0, 2))};
    };
    o.primary = range();
    o.candidate = range();
  }
  EXPECT_EQ(Canonical(MergeSpans(occ, gap)), Canonical(NaiveMerge(occ, gap)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, MergeSpansPropertyTest, ::testing::Range(0, 200));

TEST(CompareTest, SelfComparison) {
  std::mt19937_64 rng(7);
  const Sketch s = SketchOf(testing::RandomBytes(rng, 300, testing::kPrintable), "a");
  const MatchResult r = Compare(s, s);
  EXPECT_DOUBLE_EQ(r.containment, 1.0);
  EXPECT_DOUBLE_EQ(r.jaccard, 1.0);
  EXPECT_FALSE(r.spans.empty());
}

TEST(CompareTest, DisjointSketches) {
  Sketch a;
  a.source_id = "a";
  a.fingerprints = {{1, 0, 1, 1}, {2, 5, 2, 2}};
  Sketch b = a;
  b.source_id = "b";
  b.fingerprints = {{3, 0, 1, 1}};
  const MatchResult r = Compare(a, b);
  EXPECT_EQ(r.shared_fingerprints, 0u);
  EXPECT_TRUE(r.spans.empty());
  EXPECT_EQ(r.containment, 0.0);
  EXPECT_EQ(r.jaccard, 0.0);
}

TEST(CompareTest, EmptySketches) {
  Sketch a;
  const MatchResult r = Compare(a, a);
  EXPECT_EQ(r.containment, 0.0);
  EXPECT_EQ(r.jaccard, 0.0);
}

TEST(CompareTest, ScoresUseDistinctHashes) {
  Sketch a;
  a.fingerprints = {{1, 0, 1, 1}, {1, 4, 2, 2}, {2, 8, 3, 3}, {3, 12, 4, 4}};
  Sketch b;
  b.fingerprints = {{1, 0, 7, 7}, {9, 4, 8, 8}};
  const MatchResult r = Compare(a, b);
  EXPECT_EQ(r.shared_fingerprints, 1u);
  EXPECT_DOUBLE_EQ(r.containment, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.jaccard, 1.0 / 4.0);
  // Hash 1 sits on primary lines 1 and 2: both pair with candidate line 7.
  ASSERT_EQ(r.spans.size(), 1u);
  EXPECT_EQ(r.spans[0].primary_lines, (LineRange{1, 2}));
  EXPECT_EQ(r.spans[0].candidate_lines, (LineRange{7, 7}));
  EXPECT_EQ(r.spans[0].shared_count, 2u);
}

TEST(CompareTest, ParamsMismatch) {
  Sketch a;
  Sketch b;
  b.params.k = 6;
  b.params.t = 9;
  EXPECT_THROW(Compare(a, b), Error);
  Sketch c;
  c.format_version = kSketchFormatVersion + 1;
  try {
    Compare(a, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParamsMismatch);
  }
}

TEST(CompareTest, HelloAgainExample) {
  const LanguageConfig java = ResolveLanguage("java");
  const Sketch primary = FingerprintDocument(
      Normalize(testing::ReadAll(testing::TestDataDir() / "Hello.java"), java,
                "Hello.java"),
      Params{});
  const Sketch candidate = FingerprintDocument(
      Normalize(testing::ReadAll(testing::TestDataDir() / "HelloAgain.java"),
                java, "HelloAgain.java"),
      Params{});
  const MatchResult r = Compare(primary, candidate);
  ASSERT_FALSE(r.spans.empty());
  bool covers_loop = false;
  for (const MatchSpan& s : r.spans) {
    EXPECT_GE(s.candidate_lines.start, 3u);
    EXPECT_LE(s.candidate_lines.end, 8u);
    covers_loop |= s.candidate_lines.start <= 4 && s.candidate_lines.end >= 8;
  }
  EXPECT_TRUE(covers_loop);
}

class ComparePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ComparePropertyTest, SymmetryConservatismDeterminism) {
  std::mt19937_64 rng(GetParam());
  const Params p;
  std::string a = testing::RandomBytes(rng, 400, "abcdefgh$=+()");
  std::string b = testing::RandomBytes(rng, 400, "abcdefgh$=+()");
  const std::string shared = a.substr(testing::Uniform(rng, 0, 300), 40);
  b.insert(testing::Uniform(rng, 0, b.size()), shared);

  const Sketch sa = SketchOf(a, "a");
  const Sketch sb = SketchOf(b, "b");
  const MatchResult ab = Compare(sa, sb);
  const MatchResult ba = Compare(sb, sa);
  EXPECT_EQ(ab.jaccard, ba.jaccard);
  EXPECT_EQ(ab.shared_fingerprints, ba.shared_fingerprints);
  EXPECT_EQ(ab, Compare(sa, sb));
  EXPECT_GE(ab.shared_fingerprints, 1u);
  EXPECT_EQ(ab.spans.empty(), ab.shared_fingerprints == 0);

  // Every shared sketch hash is a shared full k-gram hash.
  const auto full_a = testing::AllGramHashes(a, p);
  const auto full_b = testing::AllGramHashes(b, p);
  std::set<std::uint64_t> fa;
  for (const auto& g : sa.fingerprints) fa.insert(g.hash);
  for (const auto& g : sb.fingerprints) {
    if (fa.count(g.hash)) {
      EXPECT_TRUE(full_a.count(g.hash) && full_b.count(g.hash));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ComparePropertyTest, ::testing::Range(0, 30));

TEST(CheckPrimaryTest, EmptyCorpus) {
  const Sketch p = SketchOf("abcdefghijklmnop", "p");
  const ComparisonReport report = CheckPrimary(p, {});
  EXPECT_TRUE(report.results.empty());
  EXPECT_EQ(report.primary_id, "p");
}

TEST(CheckPrimaryTest, CopyRanksFirstAndSelfIsExcluded) {
  std::mt19937_64 rng(11);
  const std::string text = testing::RandomBytes(rng, 300, testing::kPrintable);
  const Sketch primary = SketchOf(text, "p");
  const std::vector<Sketch> candidates = {
      SketchOf(testing::RandomBytes(rng, 300, "ABCDEFGHIJ"), "unrelated"),
      SketchOf(text, "copy"), primary};
  const ComparisonReport report = CheckPrimary(primary, candidates);
  ASSERT_EQ(report.results.size(), 2u);
  EXPECT_EQ(report.results[0].candidate_id, "copy");
  EXPECT_DOUBLE_EQ(report.results[0].containment, 1.0);
  EXPECT_EQ(report.results[1].candidate_id, "unrelated");
}

TEST(CheckPrimaryTest, TiesBrokenByCandidateId) {
  const std::string text = "the same normalized text appears three times";
  const Sketch primary = SketchOf(text, "p");
  const std::vector<Sketch> candidates = {SketchOf(text, "zeta"),
                                          SketchOf(text, "alpha"),
                                          SketchOf(text, "mid")};
  const ComparisonReport report = CheckPrimary(primary, candidates);
  ASSERT_EQ(report.results.size(), 3u);
  EXPECT_EQ(report.results[0].candidate_id, "alpha");
  EXPECT_EQ(report.results[1].candidate_id, "mid");
  EXPECT_EQ(report.results[2].candidate_id, "zeta");
}

TEST(CheckPrimaryTest, MismatchNamesCandidate) {
  const Sketch primary = SketchOf("abcdefghijklmnop", "p");
  const Sketch odd = SketchOf("abcdefghijklmnop", "odd-one", Params{4, 8, 10001, 256});
  try {
    CheckPrimary(primary, std::vector<Sketch>{odd});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParamsMismatch);
    EXPECT_NE(std::string(e.what()).find("odd-one"), std::string::npos);
  }
}

// Candidates over an alphabet disjoint from the primary's, each carrying a
// planted slice of the primary of length 0, t or 3t. A slice of length t
// only guarantees one shared fingerprint, which chance collisions under the
// default modulus can equal, so this uses a large modulus.
TEST(CheckPrimaryTest, RanksByPlantedOverlap) {
  const Params p{5, 8, (1ULL << 61) - 1, 256};
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const std::string primary_text = testing::RandomBytes(rng, 120, "abcdefghijklmnop");
    std::vector<Sketch> candidates;
    std::vector<std::size_t> brute_force;
    for (std::size_t len : {std::size_t{0}, std::size_t{p.t}, std::size_t{3 * p.t}}) {
      std::string c = testing::RandomBytes(rng, 120, "QRSTUVWXYZ0123456789");
      c.insert(testing::Uniform(rng, 0, c.size()),
               primary_text.substr(testing::Uniform(rng, 0, 120 - len), len));
      const auto ga = testing::AllGrams(primary_text, p.k);
      std::size_t common = 0;
      for (const auto& g : testing::AllGrams(c, p.k)) common += ga.count(g);
      brute_force.push_back(common);
      candidates.push_back(SketchOf(c, "len" + std::to_string(len), p));
    }
    ASSERT_LT(brute_force[0], brute_force[1]);
    ASSERT_LT(brute_force[1], brute_force[2]);

    const ComparisonReport report = CheckPrimary(SketchOf(primary_text, "p", p), candidates);
    ASSERT_EQ(report.results.size(), 3u);
    EXPECT_EQ(report.results[0].candidate_id, "len24") << "seed " << seed;
    EXPECT_EQ(report.results[1].candidate_id, "len8") << "seed " << seed;
    EXPECT_EQ(report.results[2].candidate_id, "len0") << "seed " << seed;
  }
}

}  // namespace
}  // namespace codealike
