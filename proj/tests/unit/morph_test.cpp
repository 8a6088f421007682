// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "error.hpp"
#include "morph.hpp"
#include "seed_data.hpp"

namespace kanspell {
namespace {

using testing::T;

MarkerList markers_from(const std::string& text) {
  std::istringstream in(text);
  return MarkerList::parse(in);
}

TEST(Markers, BundledListKeepsFileOrder) {
  auto entries = testing::seed_markers().entries();
  ASSERT_EQ(entries.size(), 12u);
  EXPECT_EQ(entries[0].form, T("u"));
  EXPECT_EQ(entries[0].category, MarkerCategory::pratyaya);
  EXPECT_EQ(entries[7].form, T("gaLu"));
  EXPECT_EQ(entries[7].category, MarkerCategory::plural);
  EXPECT_EQ(entries[11].category, MarkerCategory::gender);
  EXPECT_TRUE(testing::seed_markers().contains_form(T("alli")));
  EXPECT_FALSE(testing::seed_markers().contains_form(T("all")));
}

TEST(Markers, ParseRejectsMalformedInput) {
  EXPECT_THROW(markers_from("u\tsuffix\n"), Error);
  EXPECT_THROW(markers_from("u\n"), Error);
  EXPECT_THROW(markers_from("u\tpratyaya\nu\tpratyaya\n"), Error);
  EXPECT_THROW(markers_from("ux\tpratyaya\n"), Error);
  auto ok = markers_from("# comment\n\nalli\tpratyaya  # trailing\n");
  ASSERT_EQ(ok.entries().size(), 1u);
  EXPECT_EQ(ok.entries()[0].form, T("alli"));
  EXPECT_THROW(MarkerList::load("/nonexistent/markers.tsv"), Error);
}

TEST(Morph, AnalyzesNestedInflection) {
  auto a = analyze(T("deevaalayagaLalli"), testing::seed_lexicon(),
                   testing::seed_markers());
  ASSERT_TRUE(a);
  EXPECT_EQ(a->root, T("deevaalaya"));
  ASSERT_EQ(a->stripped.size(), 2u);
  EXPECT_EQ(a->stripped[0],
            (StrippedMarker{T("alli"), MarkerCategory::pratyaya, Rule::loopa}));
  EXPECT_EQ(a->stripped[1],
            (StrippedMarker{T("gaLu"), MarkerCategory::plural, std::nullopt}));
}

TEST(Morph, AnalyzesSandhiJunction) {
  auto a = analyze(T("maravannu"), testing::seed_lexicon(), testing::seed_markers());
  ASSERT_TRUE(a);
  EXPECT_EQ(a->root, T("mara"));
  ASSERT_EQ(a->stripped.size(), 1u);
  EXPECT_EQ(a->stripped[0],
            (StrippedMarker{T("annu"), MarkerCategory::pratyaya, Rule::aagama}));
}

TEST(Morph, PlainMembersAndUnknownWordsHaveNoAnalysis) {
  EXPECT_FALSE(analyze(T("suurya"), testing::seed_lexicon(), testing::seed_markers()));
  EXPECT_FALSE(analyze(T("sakkare"), testing::seed_lexicon(), testing::seed_markers()));
  EXPECT_FALSE(strip_one(T("sakkare"), testing::seed_markers(), testing::seed_lexicon()));
  EXPECT_FALSE(analyze(T("kkkkalli"), testing::seed_lexicon(), testing::seed_markers()));
}

TEST(Morph, StripOneTakesTheOuterMarker) {
  auto step = strip_one(T("deevaalayagaLalli"), testing::seed_markers(),
                        testing::seed_lexicon());
  ASSERT_TRUE(step);
  EXPECT_EQ(step->stem, T("deevaalayagaLu"));
  EXPECT_EQ(step->marker.form, T("alli"));
  EXPECT_EQ(step->marker.junction, Rule::loopa);
}

TEST(Morph, StripOnePrefersTheEarlierListedMarker) {
  // kaalanu = kaalan + u = kaal + anu: both reach a root; u is listed first.
  Lexicon lex = Lexicon::build({T("kaal"), T("kaalan")});
  auto step = strip_one(T("kaalanu"), testing::seed_markers(), lex);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->marker.form, T("u"));
  EXPECT_EQ(step->stem, T("kaalan"));
  // Reversing the list order flips the choice.
  auto reversed = markers_from("anu\tgender\nu\tpratyaya\n");
  auto other = strip_one(T("kaalanu"), reversed, lex);
  ASSERT_TRUE(other);
  EXPECT_EQ(other->marker.form, T("anu"));
}

TEST(Morph, CategoryTemplateOrderIsEnforced) {
  // gaLu (plural) may not sit outside alli (pratyaya).
  Lexicon lex = Lexicon::build({T("mane")});
  auto markers = markers_from("alli\tpratyaya\ngaLu\tplural\n");
  EXPECT_TRUE(analyze(T("manegaLalli"), lex, markers));
  EXPECT_FALSE(analyze(T("manealligaLu"), lex, markers));
}

TEST(Morph, ExtractRoot) {
  const auto& lex = testing::seed_lexicon();
  const auto& markers = testing::seed_markers();
  EXPECT_EQ(extract_root(T("deevaalayagaLalli"), lex, markers), T("deevaalaya"));
  EXPECT_EQ(extract_root(T("mara"), lex, markers), T("mara"));
  EXPECT_EQ(extract_root(T("suuryoodaya"), lex, markers), T("suurya"));
  EXPECT_EQ(extract_root(T("maravannu"), lex, markers), T("mara"));
  EXPECT_FALSE(extract_root(T("kkkk"), lex, markers));
}

TEST(MorphProperty, AnalysesReconstructGeneratedForms) {
  const auto& lex = testing::seed_lexicon();
  const auto& markers = testing::seed_markers();
  auto roots = testing::seed_words();
  roots.resize(60);
  std::size_t analysed = 0;
  for (const auto& root : roots) {
    for (const Marker& m : markers.entries()) {
      std::vector<PhonemeString> forms{root};
      forms.back().insert(forms.back().end(), m.form.begin(), m.form.end());
      for (const auto& j : join(root, m.form)) forms.push_back(j.word);
      for (const auto& form : forms) {
        auto a = analyze(form, lex, markers);
        if (!a) continue;
        ++analysed;
        ASSERT_EQ(reconstruct(*a), form) << render(form);
        ASSERT_TRUE(lex.contains(a->root) || !split(a->root, lex).empty());
        // Categories appear at most once, outermost first in template order.
        for (std::size_t k = 1; k < a->stripped.size(); ++k)
          ASSERT_GT(a->stripped[k - 1].category, a->stripped[k].category) ;
      }
    }
  }
  EXPECT_GT(analysed, 500u);
}

}  // namespace
}  // namespace kanspell
