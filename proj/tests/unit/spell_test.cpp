// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "seed_data.hpp"
#include "spell.hpp"

namespace kanspell {
namespace {

using testing::T;
namespace fs = std::filesystem;

std::vector<PhonemeString> candidates(const std::vector<Suggestion>& s) {
  std::vector<PhonemeString> out;
  for (const auto& x : s) out.push_back(x.candidate);
  return out;
}

bool contains(const std::vector<Suggestion>& s, std::string_view roman) {
  auto c = candidates(s);
  return std::find(c.begin(), c.end(), T(roman)) != c.end();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("kanspell_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const SpellChecker& seed_checker() {
  static const SpellChecker checker(testing::seed_lexicon(), testing::seed_markers());
  return checker;
}

TEST(Spell, Verdicts) {
  const auto& sc = seed_checker();
  EXPECT_EQ(sc.check(T("mara")).kind, VerdictKind::correct);
  auto sandhi = sc.check(T("deevaalaya"));
  EXPECT_EQ(sandhi.kind, VerdictKind::correct_sandhi);
  ASSERT_TRUE(sandhi.split);
  EXPECT_EQ(sandhi.split->prefix, T("deeva"));
  EXPECT_EQ(sandhi.split->suffix, T("aalaya"));
  EXPECT_EQ(sandhi.split->rule, Rule::savarna_deergha);
  auto inflected = sc.check(T("deevaalayagaLalli"));
  EXPECT_EQ(inflected.kind, VerdictKind::correct_inflected);
  ASSERT_TRUE(inflected.analysis);
  EXPECT_EQ(inflected.analysis->root, T("deevaalaya"));
  EXPECT_EQ(sc.check(T("maravannu")).kind, VerdictKind::correct_inflected);
  EXPECT_EQ(sc.check(T("deevaalya")).kind, VerdictKind::misspelt);
  EXPECT_EQ(sc.check(PhonemeString{}).kind, VerdictKind::misspelt);
  EXPECT_EQ(verdict_name(VerdictKind::correct_sandhi), "sandhi");
}

TEST(Spell, SandhiVerdictWithTwoWordLexicon) {
  Lexicon lex = Lexicon::build({T("deeva"), T("aalaya")});
  MarkerList none;
  SpellChecker sc(lex, none);
  EXPECT_EQ(sc.check(T("deevaalaya")).kind, VerdictKind::correct_sandhi);
  EXPECT_EQ(sc.check(T("deevaalya")).kind, VerdictKind::misspelt);
  EXPECT_TRUE(contains(sc.suggest(T("deevaalya")), "deevaalaya"));
}

TEST(Spell, ValidWordsGetNoSuggestions) {
  EXPECT_TRUE(seed_checker().suggest(T("mara")).empty());
  EXPECT_TRUE(seed_checker().suggest(T("deevaalaya")).empty());
}

TEST(Spell, RootEditExample) {
  Lexicon lex = Lexicon::build({T("avana"), T("avanu"), T("avani"), T("mara")});
  MarkerList none;
  SpellChecker sc(lex, none);
  auto s = sc.suggest(T("avant"));
  EXPECT_EQ(candidates(s), (std::vector{T("avana"), T("avani"), T("avanu")}));
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].rank, i);
    EXPECT_EQ(s[i].provenance, Provenance::root_edit);
  }
}

TEST(Spell, SuggestionsForCompoundTypos) {
  const auto& sc = seed_checker();
  EXPECT_TRUE(contains(sc.suggest(T("deevaalya")), "deevaalaya"));
  EXPECT_TRUE(contains(sc.suggest(T("maLekaala")), "maLegaala"));
  EXPECT_TRUE(contains(sc.suggest(T("suuryoodya")), "suuryoodaya"));
  EXPECT_TRUE(contains(sc.suggest(T("suuryodaya")), "suuryoodaya"));
  EXPECT_TRUE(contains(sc.suggest(T("suuriyoodaya")), "suuryoodaya"));
}

TEST(Spell, TypoThatLeavesAValidSuffix) {
  // shaale + aru with r -> t: "atu" is itself valid (ati + u).
  EXPECT_NE(seed_checker().check(T("atu")).kind, VerdictKind::misspelt);
  EXPECT_TRUE(contains(seed_checker().suggest(T("shaaleatu")), "shaalearu"));
  // beLLi + iMda by plain concatenation keeps two short i tokens.
  auto concat = [](const char* a, const char* b) {
    PhonemeString w = T(a), tail = T(b);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  };
  auto typo = concat("beLLi", "iMdra");
  ASSERT_EQ(seed_checker().check(typo).kind, VerdictKind::misspelt);
  auto found = candidates(seed_checker().suggest(typo));
  EXPECT_NE(std::find(found.begin(), found.end(), concat("beLLi", "iMda")),
            found.end());
}

TEST(Spell, TypoThatDropsTheWholeBoundary) {
  // mara + u = maroo (guNa); deleting the merged vowel leaves "mar".
  EXPECT_TRUE(contains(seed_checker().suggest(T("mar")), "maroo"));
  EXPECT_TRUE(contains(seed_checker().suggest_boundary_error(T("mar")), "maroo"));
}

TEST(Spell, ProvenanceGroups) {
  const auto& sc = seed_checker();
  // Error inside the suffix of suurya + udaya.
  auto suffix = sc.suggest_suffix_error(T("suuryoodana"));
  EXPECT_TRUE(contains(suffix, "suuryoodaya"));
  for (const auto& s : suffix) EXPECT_EQ(s.provenance, Provenance::suffix_error);
  // Error inside the prefix.
  auto prefix = sc.suggest_prefix_error(T("suuriyoodaya"));
  EXPECT_TRUE(contains(prefix, "suuryoodaya"));
  // Error in the sandhi letter itself.
  auto boundary = sc.suggest_boundary_error(T("suuryeedaya"));
  EXPECT_TRUE(contains(boundary, "suuryoodaya"));
  EXPECT_TRUE(contains(sc.suggest_boundary_error(T("maLekaala")), "maLegaala"));
  // No valid prefix, so nothing can be a suffix error.
  EXPECT_TRUE(sc.suggest_suffix_error(T("kkkkoodaya")).empty());
}

TEST(SpellProperty, RootEditMatchesBruteForce) {
  auto words = testing::seed_words();
  std::set<PhonemeString> members(words.begin(), words.end());
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto& w = words[rng() % words.size()];
    auto edits = oracle::single_edits(w);
    const auto& typo = edits[rng() % edits.size()];
    std::vector<PhonemeString> expected;
    for (const auto& m : members)
      if (m != typo && oracle::levenshtein(m, typo) <= 1) expected.push_back(m);
    auto got = candidates(seed_checker().suggest_root_edit(typo));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, expected) << render(typo);
  }
}

TEST(SpellProperty, SuggestionsAreValidAndOneEditAway) {
  const auto& sc = seed_checker();
  std::vector<PhonemeString> words;
  for (const auto& ex : testing::sandhi_corpus()) words.push_back(ex.word);
  std::mt19937 rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto& w = words[rng() % words.size()];
    auto edits = oracle::single_edits(w);
    const auto& typo = edits[rng() % edits.size()];
    if (sc.check(typo).kind != VerdictKind::misspelt) continue;
    auto s = sc.suggest(typo);
    for (std::size_t k = 0; k < s.size(); ++k) {
      ASSERT_EQ(s[k].rank, k);
      ASSERT_NE(sc.check(s[k].candidate).kind, VerdictKind::misspelt);
      ASSERT_LE(oracle::levenshtein(s[k].candidate, typo), 1u)
          << render(typo) << " -> " << render(s[k].candidate);
      if (k > 0) ASSERT_LE(s[k - 1].provenance, s[k].provenance);
    }
    auto c = candidates(s);
    ASSERT_EQ(std::set(c.begin(), c.end()).size(), c.size());
  }
}

TEST(SuggestionMemory, PinsTheChosenCandidate) {
  Lexicon lex = Lexicon::build({T("avana"), T("avanu"), T("avani")});
  MarkerList none;
  SpellChecker sc(lex, none);
  SuggestionMemory memory;
  memory.record(T("avant"), T("avanu"));
  auto s = sc.suggest(T("avant"), &memory);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].candidate, T("avanu"));
  EXPECT_EQ(s[0].rank, 0u);
  EXPECT_EQ(candidates(s), (std::vector{T("avanu"), T("avana"), T("avani")}));
  memory.record(T("avant"), T("avani"));
  EXPECT_EQ(sc.suggest(T("avant"), &memory)[0].candidate, T("avani"));
}

TEST(SuggestionMemory, StaleChoiceIsNotPinned) {
  Lexicon lex = Lexicon::build({T("avana"), T("avanu")});
  MarkerList none;
  SpellChecker sc(lex, none);
  SuggestionMemory memory;
  memory.record(T("avant"), T("avani"));  // no longer a candidate
  EXPECT_EQ(candidates(sc.suggest(T("avant"), &memory)),
            (std::vector{T("avana"), T("avanu")}));
}

TEST(SuggestionMemory, PersistsAcrossInstances) {
  TempDir dir;
  fs::path file = dir.path() / "memory.tsv";
  {
    SuggestionMemory memory(file);
    memory.record(T("avant"), T("avana"));
    memory.record(T("avant"), T("avanu"));
    memory.record(T("deevaalya"), T("deevaalaya"));
  }
  EXPECT_EQ(testing::read_text(file.string()),
            "avant\tavana\navant\tavanu\ndeevaalya\tdeevaalaya\n");
  SuggestionMemory reloaded(file);
  EXPECT_EQ(reloaded.size(), 2u);
  EXPECT_EQ(reloaded.lookup(T("avant")), T("avanu"));
  EXPECT_EQ(reloaded.lookup(T("deevaalya")), T("deevaalaya"));
  EXPECT_FALSE(reloaded.lookup(T("mara")));
}

TEST(SuggestionMemory, SkipsMalformedLines) {
  TempDir dir;
  fs::path file = dir.path() / "memory.tsv";
  std::ofstream(file) << "avant\tavanu\nbroken line\nx!\ty\n\n";
  SuggestionMemory memory(file);
  EXPECT_EQ(memory.size(), 1u);
  EXPECT_EQ(memory.lookup(T("avant")), T("avanu"));
}

TEST(SuggestionMemory, UnwritableFileIsAStorageError) {
  TempDir dir;
  SuggestionMemory memory(dir.path());  // a directory cannot be appended to
  try {
    memory.record(T("avant"), T("avanu"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::storage_error);
  }
  EXPECT_EQ(memory.size(), 0u);
}

}  // namespace
}  // namespace kanspell
