// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "engine.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "sandhi.hpp"

namespace kanspell {
namespace {

using nlohmann::json;

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

bool is_ascii_letter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

std::string trim(std::string_view s) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

json split_json(const SplitResult& s) {
  return {{"prefix", word_json(s.prefix)},
          {"suffix", word_json(s.suffix)},
          {"rule", rule_name(s.rule)},
          {"boundary_index", s.boundary_index}};
}

json stripped_json(const std::vector<StrippedMarker>& stripped) {
  json out = json::array();
  for (const auto& m : stripped) {
    out.push_back({{"form", word_json(m.form)},
                   {"category", category_name(m.category)},
                   {"junction", m.junction ? json(rule_name(*m.junction))
                                           : json(nullptr)}});
  }
  return out;
}

json suggestions_json(const std::vector<Suggestion>& list) {
  json out = json::array();
  for (const auto& s : list) {
    out.push_back({{"candidate", word_json(s.candidate)},
                   {"provenance", provenance_name(s.provenance)},
                   {"rule", s.rule ? json(rule_name(*s.rule)) : json(nullptr)},
                   {"rank", s.rank}});
  }
  return out;
}

json word_header(const ParsedWord& w, std::string_view input) {
  return {{"input", input},
          {"script", script_name(w.script)},
          {"word", word_json(w.tokens)}};
}

// Verdict fields (and suggestions for misspelt words) for one word.
void add_verdict(json& out, const Engine::Snapshot& snap,
                 const SuggestionMemory& memory, PhonemeView word) {
  Verdict v = snap.checker.check(word);
  out["verdict"] = verdict_name(v.kind);
  if (v.split) out["split"] = split_json(*v.split);
  if (v.analysis) {
    out["analysis"] = {{"root", word_json(v.analysis->root)},
                       {"stripped", stripped_json(v.analysis->stripped)}};
  }
  if (v.kind == VerdictKind::misspelt)
    out["suggestions"] = suggestions_json(snap.checker.suggest(word, &memory));
}

void append_line(const std::filesystem::path& path, const std::string& line) {
  std::error_code ec;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::app | std::ios::binary);
  out << line << '\n';
  out.flush();
  if (!out)
    throw Error(ErrorCode::storage_error, "cannot write " + path.string());
}

}  // namespace

std::string_view script_name(Script s) noexcept {
  return s == Script::kannada ? "kannada" : "roman";
}

json word_json(PhonemeView word) {
  return {{"roman", render(word)}, {"kannada", to_kannada(word)}};
}

ParsedWord parse_word(std::string_view text) {
  auto first = decode_utf8(text, 0);
  if (first && first->cp >= 0x0C80 && first->cp <= 0x0CFF)
    return {to_roman(text), Script::kannada};
  return {tokenize(text), Script::roman};
}

std::vector<PhonemeString> read_word_list(std::istream& in) {
  std::vector<PhonemeString> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string text = trim(line);
    if (text.empty()) continue;
    try {
      words.push_back(parse_word(text).tokens);
    } catch (const Error& e) {
      throw Error(e.code(), "word list line " + std::to_string(line_no) + ": " +
                                e.what());
    }
  }
  return words;
}

std::vector<PhonemeString> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  return read_word_list(in);
}

std::vector<CorpusToken> tokenize_corpus(std::string_view text,
                                         bool accept_roman) {
  std::vector<CorpusToken> out;
  enum class Run { none, kannada, latin };
  Run run = Run::none;
  std::size_t start = 0;

  auto close = [&](std::size_t end) {
    if (run == Run::none) return;
    std::string_view piece = text.substr(start, end - start);
    try {
      if (run == Run::kannada) {
        out.push_back({start, piece.size(), {to_roman(piece), Script::kannada}});
      } else if (accept_roman) {
        out.push_back({start, piece.size(), {tokenize(piece), Script::roman}});
      }
    } catch (const Error&) {
      // Not a word in either script; passed through untouched.
    }
    run = Run::none;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto d = decode_utf8(text, pos);
    std::size_t len = d ? d->length : 1;
    Run kind = Run::none;
    if (d) {
      if (is_kannada_letter(d->cp) ||
          (run == Run::kannada && (d->cp == kZwj || d->cp == kZwnj)))
        kind = Run::kannada;
      else if (is_ascii_letter(d->cp))
        kind = Run::latin;
    }
    if (kind != run) {
      close(pos);
      if (kind != Run::none) {
        run = kind;
        start = pos;
      }
    }
    pos += len;
  }
  close(text.size());
  return out;
}

Engine::Engine(EngineConfig config)
    : config_(std::move(config)), memory_(config_.memory) {
  auto markers =
      std::make_shared<const MarkerList>(MarkerList::load(config_.markers));
  Lexicon lex = Lexicon::build(load_word_list(config_.lexicon));
  if (!config_.user_lexicon.empty() &&
      std::filesystem::exists(config_.user_lexicon)) {
    for (auto& w : load_word_list(config_.user_lexicon))
      lex.add_word(std::move(w));
  }
  snapshot_ = std::make_shared<const Snapshot>(std::move(lex), std::move(markers));
}

std::shared_ptr<const Engine::Snapshot> Engine::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

bool Engine::add_word(PhonemeView word) {
  if (word.empty()) throw Error(ErrorCode::invalid_argument, "empty word");
  std::lock_guard writer(writer_mutex_);
  auto current = snapshot();
  if (current->lex.contains(word)) return false;
  if (!config_.user_lexicon.empty())
    append_line(config_.user_lexicon, render(word));
  Lexicon lex = current->lex;
  lex.add_word(PhonemeString(word.begin(), word.end()));
  auto next = std::make_shared<const Snapshot>(std::move(lex), current->markers);
  std::lock_guard lock(snapshot_mutex_);
  snapshot_ = std::move(next);
  return true;
}

void Engine::record_choice(PhonemeView misspelt, PhonemeView chosen) {
  if (misspelt.empty() || chosen.empty())
    throw Error(ErrorCode::invalid_argument, "empty word");
  if (snapshot()->checker.check(chosen).kind == VerdictKind::misspelt) {
    throw Error(ErrorCode::invalid_argument,
                "chosen word " + render(chosen) + " is not a valid word");
  }
  memory_.record(misspelt, chosen);
}

json Engine::check(std::string_view text) const {
  ParsedWord w = parse_word(text);
  json out = word_header(w, text);
  add_verdict(out, *snapshot(), memory_, w.tokens);
  return out;
}

json Engine::split(std::string_view text) const {
  ParsedWord w = parse_word(text);
  auto snap = snapshot();
  json out = word_header(w, text);
  out["splits"] = json::array();
  // Suffixes may be markers or inflected words, not only lexicon members.
  auto valid = [&](PhonemeView s) { return snap->checker.piece_valid(s); };
  for (const SplitResult& s : kanspell::split(w.tokens, snap->lex, valid))
    out["splits"].push_back(split_json(s));
  return out;
}

json Engine::join(std::string_view prefix, std::string_view suffix,
                  std::string_view rule) const {
  ParsedWord p = parse_word(prefix);
  ParsedWord s = parse_word(suffix);
  std::optional<Rule> wanted;
  if (!rule.empty()) {
    wanted = parse_rule(rule);
    if (!wanted) {
      throw Error(ErrorCode::invalid_argument,
                  "unknown rule " + std::string(rule));
    }
  }
  json out = {{"prefix", word_json(p.tokens)}, {"suffix", word_json(s.tokens)}};
  out["results"] = json::array();
  for (const JoinResult& r : kanspell::join(p.tokens, s.tokens, wanted))
    out["results"].push_back({{"word", word_json(r.word)}, {"rule", rule_name(r.rule)}});
  return out;
}

json Engine::root(std::string_view text) const {
  ParsedWord w = parse_word(text);
  auto snap = snapshot();
  json out = word_header(w, text);
  out["root"] = nullptr;
  out["stripped"] = json::array();
  out["via"] = nullptr;
  if (snap->lex.contains(w.tokens)) {
    out["root"] = word_json(w.tokens);
    out["via"] = "lexicon";
  } else if (auto a = analyze(w.tokens, snap->lex, *snap->markers)) {
    out["root"] = word_json(a->root);
    out["stripped"] = stripped_json(a->stripped);
    out["via"] = "analysis";
  } else if (auto r = extract_root(w.tokens, snap->lex, *snap->markers)) {
    out["root"] = word_json(*r);
    out["via"] = "split";
  }
  return out;
}

json Engine::suggest(std::string_view text) const {
  ParsedWord w = parse_word(text);
  json out = word_header(w, text);
  out["suggestions"] =
      suggestions_json(snapshot()->checker.suggest(w.tokens, &memory_));
  return out;
}

json Engine::corpus(std::string_view text) const {
  auto snap = snapshot();
  json tokens = json::array();
  json counts = {{"correct", 0}, {"inflected", 0}, {"sandhi", 0}, {"misspelt", 0}};
  for (const CorpusToken& t : tokenize_corpus(text, config_.accept_roman)) {
    json entry = {{"offset", t.offset},
                  {"length", t.length},
                  {"text", text.substr(t.offset, t.length)},
                  {"script", script_name(t.word.script)},
                  {"word", word_json(t.word.tokens)}};
    add_verdict(entry, *snap, memory_, t.word.tokens);
    counts[entry["verdict"].get<std::string>()] =
        counts[entry["verdict"].get<std::string>()].get<int>() + 1;
    tokens.push_back(std::move(entry));
  }
  const std::size_t total = tokens.size();
  return {{"tokens", std::move(tokens)},
          {"counts", std::move(counts)},
          {"total", total}};
}

json Engine::stats() const {
  auto snap = snapshot();
  LexiconStats s = snap->lex.stats();
  double ratio = s.forward_states == 0
                     ? 0.0
                     : static_cast<double>(s.trie_states) /
                           static_cast<double>(s.forward_states);
  return {{"word_count", s.word_count},
          {"user_word_count", snap->lex.user_words().size()},
          {"forward_states", s.forward_states},
          {"reverse_states", s.reverse_states},
          {"trie_states", s.trie_states},
          {"trie_to_automaton_ratio", ratio}};
}

std::string rules_tsv() {
  std::ostringstream out;
  out << "rule\torigin\tprefix_end\tsuffix_begin\tboundary\n";
  for (const SandhiRule& r : rule_table()) {
    for (const SandhiCase& c : r.cases) {
      out << rule_name(r.rule) << '\t'
          << (r.origin == Origin::sanskrit ? "sanskrit" : "kannada") << '\t'
          << (c.prefix_end ? symbol(*c.prefix_end) : "*") << '\t'
          << symbol(c.suffix_begin) << '\t';
      for (std::size_t i = 0; i < c.boundary.size(); ++i)
        out << (i ? " " : "") << symbol(c.boundary[i]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace kanspell
