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

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

namespace codealike {
namespace {

using testing::BruteForceWinnow;
using testing::MakeText;

std::vector<HashedGram> GramsFromHashes(const std::vector<std::uint64_t>& hashes) {
  std::vector<HashedGram> grams;
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    grams.push_back({hashes[i], i, 1, 1});
  }
  return grams;
}

Params WithWindow(std::uint32_t w) {
  Params p;
  p.k = 1;
  p.t = w;
  return p;
}

std::vector<std::pair<std::uint64_t, std::size_t>> Selected(const Sketch& s) {
  std::vector<std::pair<std::uint64_t, std::size_t>> out;
  for (const HashedGram& g : s.fingerprints) out.emplace_back(g.hash, g.offset);
  return out;
}

TEST(WinnowTest, PicksWindowMinima) {
  const Sketch s = Winnow(GramsFromHashes({5, 3, 4, 2}), WithWindow(2));
  using P = std::pair<std::uint64_t, std::size_t>;
  EXPECT_EQ(Selected(s), (std::vector<P>{{3, 1}, {2, 3}}));
  EXPECT_EQ(BruteForceWinnow({5, 3, 4, 2}, 2), (std::vector<std::size_t>{1, 3}));
}

TEST(WinnowTest, TiesPreferRightmostThenKeepPrevious) {
  const Sketch s = Winnow(GramsFromHashes({2, 2, 2}), WithWindow(2));
  using P = std::pair<std::uint64_t, std::size_t>;
  EXPECT_EQ(Selected(s), (std::vector<P>{{2, 1}}));
  EXPECT_EQ(BruteForceWinnow({2, 2, 2}, 2), (std::vector<std::size_t>{1}));
}

TEST(WinnowTest, EmptyInput) {
  const Sketch s = Winnow({}, Params{});
  EXPECT_TRUE(s.fingerprints.empty());
  EXPECT_EQ(s.normalized_length, 0u);
}

TEST(WinnowTest, ShorterThanWindowKeepsEverything) {
  const Sketch s = Winnow(GramsFromHashes({9, 1, 5}), WithWindow(4));
  EXPECT_EQ(s.fingerprints.size(), 3u);
}

TEST(FingerprintDocumentTest, Deterministic) {
  const NormalizedText nt = MakeText("$=0($=0$<$$++)$++$.$.$(\"$=\"+$)", "x");
  const Sketch a = FingerprintDocument(nt, Params{});
  const Sketch b = FingerprintDocument(nt, Params{});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.source_id, "x");
  EXPECT_EQ(a.format_version, kSketchFormatVersion);
}

TEST(FingerprintDocumentTest, ShorterThanK) {
  const Sketch s = FingerprintDocument(MakeText("abc"), Params{});
  EXPECT_TRUE(s.fingerprints.empty());
  EXPECT_EQ(s.normalized_length, 3u);
}

class WinnowPropertyTest : public ::testing::TestWithParam<int> {};

// Small hash alphabets force many ties, which is where the tie rule matters.
TEST_P(WinnowPropertyTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(GetParam());
  const std::size_t w = testing::Uniform(rng, 1, 8);
  const std::uint64_t alphabet = testing::Uniform(rng, 1, 6);
  std::vector<std::uint64_t> hashes(testing::Uniform(rng, 0, 120));
  for (auto& h : hashes) h = testing::Uniform(rng, 0, alphabet);

  const Sketch s = Winnow(GramsFromHashes(hashes),
                          WithWindow(static_cast<std::uint32_t>(w)));
  std::vector<std::size_t> offsets;
  for (const HashedGram& g : s.fingerprints) offsets.push_back(g.offset);
  EXPECT_EQ(offsets, BruteForceWinnow(hashes, w));
}

TEST_P(WinnowPropertyTest, CoverageAndSubset) {
  std::mt19937_64 rng(100 + GetParam());
  const NormalizedText nt =
      MakeText(testing::RandomBytes(rng, 1000, testing::kPrintable));
  const Params p;
  const auto grams = KgramHashes(nt, p);
  const Sketch s = FingerprintDocument(nt, p);

  std::set<std::size_t> selected;
  for (const HashedGram& g : s.fingerprints) {
    EXPECT_TRUE(selected.insert(g.offset).second) << "duplicate offset";
    EXPECT_EQ(g, grams.at(g.offset));
  }
  for (std::size_t left = 0; left + p.window() <= grams.size(); ++left) {
    auto it = selected.lower_bound(left);
    EXPECT_TRUE(it != selected.end() && *it < left + p.window())
        << "window at " << left << " has no fingerprint";
  }
}

TEST_P(WinnowPropertyTest, PlantedSubstringOfLengthTIsShared) {
  std::mt19937_64 rng(200 + GetParam());
  const Params p;
  const std::string common = testing::RandomBytes(rng, p.t, testing::kPrintable);
  std::string a = testing::RandomBytes(rng, 300, testing::kPrintable);
  std::string b = testing::RandomBytes(rng, 300, testing::kPrintable);
  a.insert(testing::Uniform(rng, 0, a.size()), common);
  b.insert(testing::Uniform(rng, 0, b.size()), common);
  std::set<std::uint64_t> ha;
  std::set<std::uint64_t> hb;
  for (const auto& g : FingerprintDocument(MakeText(a), p).fingerprints) ha.insert(g.hash);
  for (const auto& g : FingerprintDocument(MakeText(b), p).fingerprints) hb.insert(g.hash);
  const std::set<std::uint64_t> in_common = testing::AllGramHashes(common, p);
  bool found = false;
  for (std::uint64_t h : in_common) found |= ha.count(h) && hb.count(h);
  EXPECT_TRUE(found);
}

TEST_P(WinnowPropertyTest, SelectionIsLocal) {
  std::mt19937_64 rng(300 + GetParam());
  const Params p;
  const std::string body = testing::RandomBytes(rng, 400, testing::kPrintable);
  const std::string prefix =
      testing::RandomBytes(rng, testing::Uniform(rng, 1, 60), testing::kPrintable);
  const Sketch plain = FingerprintDocument(MakeText(body), p);
  const Sketch prefixed = FingerprintDocument(MakeText(prefix + body), p);

  // Far enough from the seam, selections coincide modulo the shift.
  const std::size_t margin = 2 * p.window();
  std::set<std::size_t> a;
  std::set<std::size_t> b;
  for (const auto& g : plain.fingerprints) {
    if (g.offset >= margin) a.insert(g.offset);
  }
  for (const auto& g : prefixed.fingerprints) {
    if (g.offset >= prefix.size() + margin) b.insert(g.offset - prefix.size());
  }
  EXPECT_EQ(a, b);
}

INSTANTIATE_TEST_SUITE_P(Seeds, WinnowPropertyTest, ::testing::Range(0, 50));

}  // namespace
}  // namespace codealike
