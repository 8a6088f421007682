// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

// Access to the bundled data files.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "engine.hpp"
#include "lexicon.hpp"
#include "morph.hpp"
#include "sandhi.hpp"

namespace kanspell::testing {

inline std::string data_path(const std::string& name) {
  return std::string(KANSPELL_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<PhonemeString> seed_words() {
  return load_word_list(data_path("lexicon.txt"));
}

inline const Lexicon& seed_lexicon() {
  static const Lexicon lex = Lexicon::build(seed_words());
  return lex;
}

inline const MarkerList& seed_markers() {
  static const MarkerList markers = MarkerList::load(data_path("markers.tsv"));
  return markers;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct SandhiExample {
  PhonemeString word, prefix, suffix;
  Rule rule;
};

inline std::vector<SandhiExample> sandhi_corpus() {
  std::vector<SandhiExample> out;
  std::ifstream in(data_path("sandhi_corpus.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string w, p, s, r;
    std::getline(fields, w, '\t');
    std::getline(fields, p, '\t');
    std::getline(fields, s, '\t');
    std::getline(fields, r, '\t');
    out.push_back({tokenize(w), tokenize(p), tokenize(s), *parse_rule(r)});
  }
  return out;
}

// Shorthand for token strings in assertions.
inline PhonemeString T(std::string_view roman) { return tokenize(roman); }

}  // namespace kanspell::testing
