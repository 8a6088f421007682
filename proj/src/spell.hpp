// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "lexicon.hpp"
#include "morph.hpp"
#include "sandhi.hpp"
#include "translit.hpp"

namespace kanspell {

enum class VerdictKind : std::uint8_t {
  correct,
  correct_inflected,
  correct_sandhi,
  misspelt,
};

std::string_view verdict_name(VerdictKind k) noexcept;

struct Verdict {
  VerdictKind kind = VerdictKind::misspelt;
  std::optional<Analysis> analysis;  // correct_inflected
  std::optional<SplitResult> split;  // correct_sandhi (primary split)
};

// Where the error is assumed to be; also the suggestion group order.
enum class Provenance : std::uint8_t {
  root_edit,
  suffix_error,
  prefix_error,
  boundary_error,
};

std::string_view provenance_name(Provenance p) noexcept;

struct Suggestion {
  PhonemeString candidate;
  Provenance provenance;
  std::optional<Rule> rule;
  std::size_t rank = 0;
};

// Last picked suggestion per misspelt word. Optionally backed by a file of
// "misspelt<TAB>chosen" lines (roman), where the last occurrence wins.
// Writers are serialized; readers may run concurrently.
class SuggestionMemory {
 public:
  SuggestionMemory() = default;
  // Loads `path` if it exists; records are appended to it. An empty path
  // keeps choices in memory only.
  explicit SuggestionMemory(std::filesystem::path path);

  std::optional<PhonemeString> lookup(PhonemeView misspelt) const;
  // Persists before updating; throws Error(storage_error) and leaves the
  // memory unchanged when the write fails.
  void record(PhonemeView misspelt, PhonemeView chosen);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<PhonemeString, PhonemeString> choices_;
  std::optional<std::filesystem::path> path_;
};

class SpellChecker {
 public:
  // Both must outlive the checker.
  SpellChecker(const Lexicon& lex, const MarkerList& markers)
      : lex_(lex), markers_(markers) {}

  Verdict check(PhonemeView word) const;

  // Empty for words that do not check as misspelt. The remembered choice,
  // when still produced, is moved to rank 0.
  std::vector<Suggestion> suggest(PhonemeView word,
                                  const SuggestionMemory* memory = nullptr) const;

  std::vector<Suggestion> suggest_root_edit(PhonemeView word) const;
  std::vector<Suggestion> suggest_suffix_error(PhonemeView word) const;
  std::vector<Suggestion> suggest_prefix_error(PhonemeView word) const;
  std::vector<Suggestion> suggest_boundary_error(PhonemeView word) const;

  // Morph-aware suffix validation used by check().
  bool suffix_valid(PhonemeView suffix) const;
  // suffix_valid, or a bare marker form.
  bool piece_valid(PhonemeView piece) const;

 private:
  void collect_root_edit(PhonemeView word, std::vector<Suggestion>& out) const;
  void collect_suffix_error(PhonemeView word, std::vector<Suggestion>& out) const;
  void collect_prefix_error(PhonemeView word, std::vector<Suggestion>& out) const;
  void collect_boundary_error(PhonemeView word,
                              std::vector<Suggestion>& out) const;
  // Keeps valid candidates, first occurrence per candidate, group order then
  // alphabetical.
  std::vector<Suggestion> finish(std::vector<Suggestion> raw) const;

  const Lexicon& lex_;
  const MarkerList& markers_;
};

}  // namespace kanspell
