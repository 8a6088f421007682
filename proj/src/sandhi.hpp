// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lexicon.hpp"
#include "translit.hpp"

namespace kanspell {

// Declaration order is the tie-breaking priority.
enum class Rule : std::uint8_t {
  savarna_deergha,
  guna,
  vrddhi,
  yan,
  aadeesha,
  aagama,
  loopa,
};

inline constexpr std::size_t kRuleCount = 7;

enum class Origin : std::uint8_t { sanskrit, kannada };

std::string_view rule_name(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;
Origin rule_origin(Rule rule) noexcept;

// One forward case: prefix ending in `prefix_end` (any token when absent)
// joined to a suffix starting with `suffix_begin` yields `boundary` in place
// of those edge tokens. When `keeps_prefix_end` the boundary starts with the
// prefix's last token unchanged; when `keeps_suffix_begin` it ends with the
// suffix's first token unchanged.
struct SandhiCase {
  Rule rule;
  std::optional<Token> prefix_end;
  Token suffix_begin;
  PhonemeString boundary;
  bool keeps_prefix_end = false;
  bool keeps_suffix_begin = false;
};

struct SandhiRule {
  Rule rule;
  Origin origin;
  std::vector<SandhiCase> cases;
};

// The seven rules, in priority order. Frozen data.
const std::vector<SandhiRule>& rule_table();

struct JoinResult {
  PhonemeString word;
  Rule rule;

  bool operator==(const JoinResult&) const = default;
};

// Joins with every applicable rule (priority order), or only `rule`.
// Throws Error(invalid_argument) on empty input and
// Error(rule_not_applicable) when a requested rule does not fit the edges.
std::vector<JoinResult> join(PhonemeView prefix, PhonemeView suffix,
                             std::optional<Rule> rule = std::nullopt);
// Non-throwing single-rule join.
std::optional<PhonemeString> join_with(PhonemeView prefix, PhonemeView suffix,
                                       Rule rule);

// Inverse view of a forward case. A word X + [letter] + Y splits into
// prefix X + prefix_end and suffix suffix_begin + Y.
struct ReverseCandidate {
  Rule rule;
  Token letter;
  PhonemeString prefix_end;
  PhonemeString suffix_begin;

  bool operator==(const ReverseCandidate&) const = default;
};

// Candidates explaining a boundary window of one or two tokens (the sandhi
// letter and, optionally, the token after it). Ordered by rule priority,
// longer prefix_end first, then table order.
std::vector<ReverseCandidate> reverse_candidates(PhonemeView window);

struct SplitResult {
  PhonemeString prefix;
  PhonemeString suffix;
  Rule rule;
  std::size_t boundary_index;  // position of the sandhi letter in the word

  bool operator==(const SplitResult&) const = default;
};

// Every (prefix, suffix, rule) whose forward join reproduces `word`,
// without any lexicon validation. Unordered beyond cut position.
std::vector<SplitResult> candidate_splits(PhonemeView word);

// candidate_splits restricted to the given suffix.
std::vector<SplitResult> splits_with_suffix(PhonemeView word,
                                            PhonemeView suffix);

using SuffixValidator = std::function<bool(PhonemeView)>;

// Expected-prefix splitter: walks expected prefixes longest-first, moves
// the prefix's final letter into the remainder, reads the sandhi letters and
// validates reconstructions. Suffixes are checked with `validator` when
// given, plain lexicon membership otherwise. Primary split first.
std::vector<SplitResult> split(PhonemeView word, const Lexicon& lex,
                               const SuffixValidator& validator = {});

// Baseline: try reverse rules only at sandhi points.
std::vector<SplitResult> split_by_place(PhonemeView word, const Lexicon& lex);

// Baseline: longest expected prefix against longest expected suffix.
std::vector<SplitResult> split_prefix_suffix(PhonemeView word,
                                             const Lexicon& lex);

// Positions of long vowels and of the first consonant of each adjacent
// consonant pair.
std::vector<std::size_t> sandhi_points(PhonemeView word);

// Result ordering shared by the splitters.
void sort_splits(std::vector<SplitResult>& splits);

}  // namespace kanspell
