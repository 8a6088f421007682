// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <set>
#include <span>
#include <vector>

#include "translit.hpp"

namespace kanspell {

// Minimal acyclic deterministic automaton over phoneme tokens, built from
// sorted input with on-the-fly suffix sharing. Immutable once built.
class Automaton {
 public:
  using StateId = std::uint32_t;
  static constexpr StateId kNone = std::numeric_limits<StateId>::max();

  struct Transition {
    Token label;
    StateId target;
  };

  Automaton() = default;

  // `words` must be strictly increasing (lexicographic token order) and
  // free of empty strings.
  static Automaton from_sorted(std::span<const PhonemeString> words);

  StateId root() const noexcept { return 0; }
  StateId next(StateId state, Token label) const noexcept;
  bool is_final(StateId state) const noexcept { return final_[state]; }
  std::span<const Transition> transitions(StateId state) const noexcept {
    return {edges_.data() + offsets_[state],
            edges_.data() + offsets_[state + 1]};
  }

  // State reached by reading `word` from the root, or kNone.
  StateId walk(PhonemeView word) const noexcept;
  bool contains(PhonemeView word) const noexcept;

  std::size_t state_count() const noexcept { return final_.size(); }
  std::size_t transition_count() const noexcept { return edges_.size(); }
  // Number of nodes a plain trie over the same words would need.
  std::uint64_t trie_state_count() const;
  std::vector<PhonemeString> words() const;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Transition> edges_;
  std::vector<bool> final_;
};

class DistanceConstraint {
 public:
  enum class Mode { none, first_token_fixed, last_token_fixed };

  static DistanceConstraint none() { return {Mode::none, Token::a}; }
  static DistanceConstraint first_token(Token t) {
    return {Mode::first_token_fixed, t};
  }
  static DistanceConstraint last_token(Token t) {
    return {Mode::last_token_fixed, t};
  }

  Mode mode() const noexcept { return mode_; }
  Token token() const noexcept { return token_; }
  bool admits(PhonemeView word) const noexcept;

 private:
  DistanceConstraint(Mode mode, Token token) : mode_(mode), token_(token) {}
  Mode mode_;
  Token token_;
};

// A lexicon word E = word[0, cut) + E.back(): every token but the last one
// matches the query.
struct ExpectedPrefix {
  std::size_t cut;
  PhonemeString word;
};

// A lexicon word F = F.front() + word[start, end): every token but the first
// one matches the query's tail.
struct ExpectedSuffix {
  std::size_t start;
  PhonemeString word;
};

struct LexiconStats {
  std::size_t word_count = 0;
  std::size_t forward_states = 0;
  std::size_t reverse_states = 0;
  std::uint64_t trie_states = 0;
};

// Word store: a frozen forward/reverse automaton pair plus a side set of
// user-added words. Copies share the automata.
class Lexicon {
 public:
  // Sorts and deduplicates; throws Error(empty_lexicon) on empty input.
  static Lexicon build(std::vector<PhonemeString> words);

  bool contains(PhonemeView word) const;
  // Members that are token prefixes / suffixes of `word`, longest first.
  std::vector<PhonemeString> prefixes(PhonemeView word) const;
  std::vector<PhonemeString> suffixes(PhonemeView word) const;
  // Members at token edit distance <= 1 that satisfy `c`, sorted.
  std::vector<PhonemeString> within_distance_one(PhonemeView word,
                                                 DistanceConstraint c) const;

  std::vector<ExpectedPrefix> expected_prefixes(PhonemeView word) const;
  std::vector<ExpectedSuffix> expected_suffixes(PhonemeView word) const;
  // Largest k such that word[0, k) is a prefix of some member.
  std::size_t prefix_depth(PhonemeView word) const;

  // Returns false (and leaves the lexicon unchanged) for existing members.
  bool add_word(PhonemeString word);

  std::size_t word_count() const noexcept {
    return base_->word_count + user_.size();
  }
  LexiconStats stats() const;

  const Automaton& forward() const noexcept { return base_->forward; }
  const Automaton& reverse() const noexcept { return base_->reverse; }
  const std::set<PhonemeString>& user_words() const noexcept { return user_; }

 private:
  struct Base {
    Automaton forward;
    Automaton reverse;
    std::size_t word_count = 0;
  };

  std::shared_ptr<const Base> base_;
  std::set<PhonemeString> user_;
};

}  // namespace kanspell
