// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexicon.hpp"
#include "sandhi.hpp"
#include "translit.hpp"

namespace kanspell {

// Slots of the right-edge template [root][gender][plural][pratyaya].
enum class MarkerCategory : std::uint8_t { pratyaya, plural, gender };

std::string_view category_name(MarkerCategory c) noexcept;
std::optional<MarkerCategory> parse_category(std::string_view s) noexcept;

struct Marker {
  PhonemeString form;
  MarkerCategory category;
};

// Inflection markers in decreasing priority (file order).
class MarkerList {
 public:
  MarkerList() = default;
  // Throws Error(invalid_argument) on empty forms or duplicate entries.
  explicit MarkerList(std::vector<Marker> entries);

  // "form<TAB>category" per line, '#' comments, blank lines ignored.
  static MarkerList parse(std::istream& in);
  static MarkerList load(const std::filesystem::path& path);

  std::span<const Marker> entries() const noexcept { return entries_; }
  bool contains_form(PhonemeView form) const noexcept;

 private:
  std::vector<Marker> entries_;
};

struct StrippedMarker {
  PhonemeString form;
  MarkerCategory category;
  std::optional<Rule> junction;  // none: plain concatenation

  bool operator==(const StrippedMarker&) const = default;
};

struct Analysis {
  PhonemeString root;
  std::vector<StrippedMarker> stripped;  // outermost first

  bool operator==(const Analysis&) const = default;
};

struct StripStep {
  PhonemeString stem;
  StrippedMarker marker;
};

// Every way of removing one allowed marker from the right edge, in priority
// order: markers in list order, verbatim match before sandhi junctions.
// Stems are never longer than the word and never equal to it.
std::vector<StripStep> strip_candidates(PhonemeView word,
                                        const MarkerList& markers,
                                        std::span<const MarkerCategory> allowed);

// First strip (priority order) whose stem is recognizable: a root, or
// itself strippable under the template order.
std::optional<StripStep> strip_one(PhonemeView word, const MarkerList& markers,
                                   const Lexicon& lex);

// Strips markers until the residue is a lexicon member. Falls back to a
// residue that is a valid sandhi compound of members when no such analysis
// exists. Returns nullopt when nothing can be stripped.
std::optional<Analysis> analyze(PhonemeView word, const Lexicon& lex,
                                const MarkerList& markers);

// Member -> itself; inflected -> analyzed root; compound -> primary prefix.
std::optional<PhonemeString> extract_root(PhonemeView word, const Lexicon& lex,
                                          const MarkerList& markers);

// Re-applies the stripped markers innermost first. Returns nullopt if a
// recorded junction rule does not apply.
std::optional<PhonemeString> reconstruct(const Analysis& analysis);

}  // namespace kanspell
