// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

// Loaded data plus the whole pipeline, with JSON reports. Readers work on an
// immutable snapshot; adding a word builds a new snapshot and swaps it in.

#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexicon.hpp"
#include "morph.hpp"
#include "spell.hpp"
#include "translit.hpp"

namespace kanspell {

struct EngineConfig {
  std::filesystem::path lexicon;
  std::filesystem::path markers;
  std::filesystem::path memory;        // empty: choices kept in memory only
  std::filesystem::path user_lexicon;  // empty: added words not persisted
  bool accept_roman = true;            // corpus mode: take Latin-letter runs
};

enum class Script : std::uint8_t { kannada, roman };

std::string_view script_name(Script s) noexcept;

// A word as typed: Kannada script is transliterated, anything else must be
// valid roman. Throws Error(invalid_roman_input | unmappable_codepoint).
struct ParsedWord {
  PhonemeString tokens;
  Script script;
};
ParsedWord parse_word(std::string_view text);

// Word list: one word per line (either script), '#' comments.
std::vector<PhonemeString> read_word_list(std::istream& in);
std::vector<PhonemeString> load_word_list(const std::filesystem::path& path);

struct CorpusToken {
  std::size_t offset;  // bytes
  std::size_t length;  // bytes
  ParsedWord word;
};

// Splits text into word tokens: runs of Kannada letters, and (when
// `accept_roman`) runs of ASCII letters that tokenize as roman. Everything
// else separates words.
std::vector<CorpusToken> tokenize_corpus(std::string_view text,
                                         bool accept_roman = true);

class Engine {
 public:
  struct Snapshot {
    Snapshot(Lexicon l, std::shared_ptr<const MarkerList> m)
        : lex(std::move(l)), markers(std::move(m)), checker(lex, *markers) {}
    Snapshot(const Snapshot&) = delete;
    Snapshot& operator=(const Snapshot&) = delete;

    Lexicon lex;
    std::shared_ptr<const MarkerList> markers;
    SpellChecker checker;
  };

  // Throws Error(io_error | empty_lexicon | invalid_argument ...) when the
  // data files cannot be loaded.
  explicit Engine(EngineConfig config);

  std::shared_ptr<const Snapshot> snapshot() const;
  SuggestionMemory& memory() noexcept { return memory_; }
  const EngineConfig& config() const noexcept { return config_; }

  // Adds to the user lexicon (persisted first when configured). False when
  // the word is already known.
  bool add_word(PhonemeView word);
  // Throws Error(invalid_argument) unless `chosen` is a valid word.
  void record_choice(PhonemeView misspelt, PhonemeView chosen);

  nlohmann::json check(std::string_view text) const;
  nlohmann::json split(std::string_view text) const;
  nlohmann::json join(std::string_view prefix, std::string_view suffix,
                      std::string_view rule) const;  // empty rule: all
  nlohmann::json root(std::string_view text) const;
  nlohmann::json suggest(std::string_view text) const;
  nlohmann::json corpus(std::string_view text) const;
  nlohmann::json stats() const;

 private:
  EngineConfig config_;
  SuggestionMemory memory_;
  mutable std::mutex snapshot_mutex_;  // guards the pointer only
  std::mutex writer_mutex_;            // serializes add_word
  std::shared_ptr<const Snapshot> snapshot_;
};

// Tab-separated dump of the rule table; '*' marks "any token".
std::string rules_tsv();

nlohmann::json word_json(PhonemeView word);

}  // namespace kanspell
