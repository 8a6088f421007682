// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "engine.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "seed_data.hpp"
#include "chart.hpp"
#include "translit.hpp"

namespace kanspell {
namespace {

using testing::T;
using testing::kConsonants;
using testing::kVowels;
using K = Token;

const std::string kVirama = "್";

TEST(Translit, AlphabetHasFiftyTwoDistinctSymbols) {
  EXPECT_EQ(all_tokens().size(), 52u);
  std::set<std::string_view> seen;
  std::size_t vowels = 0, consonants = 0, modifiers = 0;
  for (Token t : all_tokens()) {
    EXPECT_TRUE(seen.insert(symbol(t)).second) << symbol(t);
    EXPECT_EQ(token_from_symbol(symbol(t)), t);
    switch (kind(t)) {
      case TokenKind::vowel: ++vowels; break;
      case TokenKind::consonant: ++consonants; break;
      case TokenKind::modifier: ++modifiers; break;
    }
  }
  EXPECT_EQ(vowels, 14u);
  EXPECT_EQ(modifiers, 2u);
  EXPECT_EQ(consonants, 36u);
  std::set<std::string_view> long_vowels;
  for (Token t : all_tokens())
    if (is_long_vowel(t)) long_vowels.insert(symbol(t));
  EXPECT_EQ(long_vowels, (std::set<std::string_view>{"aa", "ii", "uu", "RR",
                                                     "ee", "oo", "ai", "au"}));
}

TEST(Translit, EveryChartVowelMapsBothWays) {
  for (const auto& row : kVowels) {
    PhonemeString tok{*token_from_symbol(row.roman)};
    EXPECT_EQ(to_roman(row.letter), tok) << row.roman;
    EXPECT_EQ(to_kannada(tok), row.letter) << row.roman;
    // As a vowel sign on ka.
    PhonemeString ka{K::k, tok[0]};
    std::string syllable = std::string("ಕ") + row.sign;
    EXPECT_EQ(to_roman(syllable), ka) << row.roman;
    EXPECT_EQ(to_kannada(ka), syllable) << row.roman;
  }
}

TEST(Translit, EveryChartConsonantMapsBothWays) {
  for (const auto& row : kConsonants) {
    Token c = *token_from_symbol(row.roman);
    EXPECT_EQ(to_roman(row.letter), (PhonemeString{c, K::a})) << row.roman;
    EXPECT_EQ(to_roman(std::string(row.letter) + kVirama), PhonemeString{c})
        << row.roman;
    EXPECT_EQ(to_kannada(PhonemeString{c}), std::string(row.letter) + kVirama);
    EXPECT_EQ(to_kannada(PhonemeString{c, K::a}), row.letter);
  }
  EXPECT_EQ(to_roman("ಅಂ"), (PhonemeString{K::a, K::M}));
  EXPECT_EQ(to_roman("ದುಃಖ"), (PhonemeString{K::d, K::u, K::H, K::kh, K::a}));
}

TEST(Translit, WordExamples) {
  EXPECT_EQ(to_roman("ಅವನು"), T("avanu"));
  EXPECT_EQ(to_roman("ಸೂರ್ಯ"), (PhonemeString{K::s, K::uu, K::r, K::y, K::a}));
  EXPECT_EQ(to_roman(""), PhonemeString{});
  EXPECT_EQ(to_kannada(T("avanu")), "ಅವನು");
  EXPECT_EQ(to_kannada(T("maLe")), "ಮಳೆ");
  EXPECT_EQ(to_kannada(PhonemeString{}), "");
  EXPECT_EQ(to_kannada(T("suurya")), "ಸೂರ್ಯ");
}

TEST(Translit, TokenizeIsGreedyLongestMatch) {
  EXPECT_EQ(tokenize("deevaalaya"),
            (PhonemeString{K::d, K::ee, K::v, K::aa, K::l, K::a, K::y, K::a}));
  EXPECT_EQ(tokenize("a"), PhonemeString{K::a});
  EXPECT_EQ(tokenize("suuryoodaya"),
            (PhonemeString{K::s, K::uu, K::r, K::y, K::oo, K::d, K::a, K::y, K::a}));
  EXPECT_EQ(tokenize("ai"), PhonemeString{K::ai});
  EXPECT_EQ(tokenize("kha"), (PhonemeString{K::kh, K::a}));
  EXPECT_EQ(tokenize(""), PhonemeString{});
}

TEST(Translit, TokenizeReportsOffendingPosition) {
  try {
    tokenize("dex");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_roman_input);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(tokenize("ab c"), Error);
  EXPECT_THROW(tokenize("q"), Error);
}

TEST(Translit, ToRomanReportsOffendingByteOffset) {
  try {
    to_roman("ಮರx");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unmappable_codepoint);
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(to_roman("\xff"), Error);
  EXPECT_THROW(to_roman("೧"), Error);  // digit
}

TEST(Translit, FusingAdjacencyIsDetected) {
  EXPECT_TRUE(has_fusing_adjacency(PhonemeString{K::a, K::i}));
  EXPECT_TRUE(has_fusing_adjacency(PhonemeString{K::k, K::h}));
  EXPECT_TRUE(has_fusing_adjacency(PhonemeString{K::n, K::g}));
  EXPECT_FALSE(has_fusing_adjacency(T("deevaalaya")));
  // Greedy tokenization resolves the fusion to the long token.
  EXPECT_EQ(tokenize(render(PhonemeString{K::a, K::i})), PhonemeString{K::ai});
}

// Every token string written in Kannada reads back unchanged, fusing or not.
TEST(TranslitProperty, KannadaRoundTripOnRandomStrings) {
  std::mt19937 rng(11);
  for (int i = 0; i < 5000; ++i) {
    PhonemeString p = oracle::random_word(rng, 0, 10);
    ASSERT_EQ(to_roman(to_kannada(p)), p) << render(p);
  }
}

TEST(TranslitProperty, RomanRoundTripOnNonFusingStrings) {
  std::mt19937 rng(12);
  int checked = 0;
  while (checked < 5000) {
    PhonemeString p = oracle::random_word(rng, 0, 8);
    if (has_fusing_adjacency(p)) continue;
    ASSERT_EQ(tokenize(render(p)), p) << render(p);
    ++checked;
  }
}

TEST(TranslitProperty, NonFusingStringsAreExactlyTheRoundTrippingOnes) {
  // Brute force over all two-token strings.
  for (Token a : all_tokens()) {
    for (Token b : all_tokens()) {
      PhonemeString p{a, b};
      bool round_trips = tokenize(render(p)) == p;
      EXPECT_EQ(round_trips, !has_fusing_adjacency(p)) << render(p);
    }
  }
}

TEST(TranslitProperty, BundledKannadaCorpusRoundTrips) {
  std::string text = testing::read_text(testing::data_path("corpus_kn.txt"));
  auto tokens = tokenize_corpus(text, false);
  ASSERT_GT(tokens.size(), 100u);
  for (const auto& t : tokens) {
    std::string_view original(text.data() + t.offset, t.length);
    EXPECT_EQ(to_kannada(to_roman(original)), original);
  }
}

}  // namespace
}  // namespace kanspell
