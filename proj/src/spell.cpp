// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "spell.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <set>
#include <string>

#include "distance.hpp"
#include "error.hpp"

namespace kanspell {
namespace {

constexpr std::array<std::string_view, 4> kVerdictNames{
    "correct", "inflected", "sandhi", "misspelt"};
constexpr std::array<std::string_view, 4> kProvenanceNames{
    "root_edit", "suffix_error", "prefix_error", "boundary_error"};

// Largest token gap between an expected prefix and an expected suffix that
// one edit can leave behind: three boundary tokens (aagama) plus an insertion.
constexpr std::size_t kMaxGap = 4;

// A split of the input that failed validation on one side. No rule means
// plain concatenation, only considered against marker forms.
struct NearSplit {
  PhonemeString prefix;
  PhonemeString suffix;
  std::optional<Rule> rule;
};

std::vector<NearSplit> near_splits(PhonemeView word) {
  std::vector<NearSplit> out;
  for (SplitResult& s : candidate_splits(word))
    out.push_back({std::move(s.prefix), std::move(s.suffix), s.rule});
  for (std::size_t cut = 1; cut < word.size(); ++cut) {
    out.push_back({PhonemeString(word.begin(), word.begin() + cut),
                   PhonemeString(word.begin() + cut, word.end()), std::nullopt});
  }
  return out;
}

std::optional<PhonemeString> rejoin(PhonemeView prefix, PhonemeView suffix,
                                    std::optional<Rule> rule) {
  if (rule) return join_with(prefix, suffix, *rule);
  PhonemeString out(prefix.begin(), prefix.end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

std::string roman_line(PhonemeView misspelt, PhonemeView chosen) {
  return render(misspelt) + '\t' + render(chosen) + '\n';
}

}  // namespace

std::string_view verdict_name(VerdictKind k) noexcept {
  return kVerdictNames[static_cast<std::size_t>(k)];
}

std::string_view provenance_name(Provenance p) noexcept {
  return kProvenanceNames[static_cast<std::size_t>(p)];
}

SuggestionMemory::SuggestionMemory(std::filesystem::path path) {
  if (path.empty()) return;
  path_ = std::move(path);
  std::ifstream in(*path_);
  if (!in) return;  // nothing remembered yet
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    try {
      PhonemeString misspelt = tokenize(line.substr(0, tab));
      PhonemeString chosen = tokenize(line.substr(tab + 1));
      if (misspelt.empty() || chosen.empty()) continue;
      choices_[std::move(misspelt)] = std::move(chosen);
    } catch (const Error&) {
      // A damaged line loses only itself.
    }
  }
}

std::optional<PhonemeString> SuggestionMemory::lookup(
    PhonemeView misspelt) const {
  std::shared_lock lock(mutex_);
  auto it = choices_.find(PhonemeString(misspelt.begin(), misspelt.end()));
  if (it == choices_.end()) return std::nullopt;
  return it->second;
}

void SuggestionMemory::record(PhonemeView misspelt, PhonemeView chosen) {
  if (misspelt.empty() || chosen.empty())
    throw Error(ErrorCode::invalid_argument, "empty word in suggestion memory");
  std::unique_lock lock(mutex_);
  if (path_) {
    std::ofstream out(*path_, std::ios::app | std::ios::binary);
    out << roman_line(misspelt, chosen);
    out.flush();
    if (!out) {
      throw Error(ErrorCode::storage_error,
                  "cannot write suggestion memory " + path_->string());
    }
  }
  choices_[PhonemeString(misspelt.begin(), misspelt.end())] =
      PhonemeString(chosen.begin(), chosen.end());
}

std::size_t SuggestionMemory::size() const {
  std::shared_lock lock(mutex_);
  return choices_.size();
}

bool SpellChecker::suffix_valid(PhonemeView suffix) const {
  return lex_.contains(suffix) || analyze(suffix, lex_, markers_).has_value();
}

bool SpellChecker::piece_valid(PhonemeView piece) const {
  return markers_.contains_form(piece) || suffix_valid(piece);
}

Verdict SpellChecker::check(PhonemeView word) const {
  Verdict v;
  if (word.empty()) return v;
  if (lex_.contains(word)) {
    v.kind = VerdictKind::correct;
    return v;
  }
  if (auto a = analyze(word, lex_, markers_)) {
    v.kind = VerdictKind::correct_inflected;
    v.analysis = std::move(a);
    return v;
  }
  auto splits =
      split(word, lex_, [this](PhonemeView s) { return suffix_valid(s); });
  if (!splits.empty()) {
    v.kind = VerdictKind::correct_sandhi;
    v.split = std::move(splits.front());
  }
  return v;
}

void SpellChecker::collect_root_edit(PhonemeView word,
                                     std::vector<Suggestion>& out) const {
  for (PhonemeString& m :
       lex_.within_distance_one(word, DistanceConstraint::none())) {
    if (std::equal(m.begin(), m.end(), word.begin(), word.end())) continue;
    out.push_back({std::move(m), Provenance::root_edit, std::nullopt});
  }
}

void SpellChecker::collect_suffix_error(PhonemeView word,
                                        std::vector<Suggestion>& out) const {
  // The suffix is not required to be invalid: a typo can turn it into
  // another valid piece (ati + u = atu), and the caller validates candidates.
  for (const NearSplit& ns : near_splits(word)) {
    if (!lex_.contains(ns.prefix)) continue;
    std::vector<PhonemeString> pool;
    if (ns.rule) {
      // The rule fixes the suffix's first token.
      pool = lex_.within_distance_one(
          ns.suffix, DistanceConstraint::first_token(ns.suffix.front()));
    }
    for (const Marker& m : markers_.entries()) {
      if (ns.rule && m.form.front() != ns.suffix.front()) continue;
      if (within_one_edit(m.form, ns.suffix)) pool.push_back(m.form);
    }
    for (const PhonemeString& s : pool) {
      auto joined = rejoin(ns.prefix, s, ns.rule);
      if (joined && within_one_edit(*joined, word))
        out.push_back({std::move(*joined), Provenance::suffix_error, ns.rule});
    }
  }
}

void SpellChecker::collect_prefix_error(PhonemeView word,
                                        std::vector<Suggestion>& out) const {
  std::map<PhonemeString, bool> valid;  // suffix -> piece_valid
  std::vector<Suggestion> found;
  for (const NearSplit& ns : near_splits(word)) {
    if (!ns.rule && !markers_.contains_form(ns.suffix)) continue;
    auto constraint = ns.rule ? DistanceConstraint::last_token(ns.prefix.back())
                              : DistanceConstraint::none();
    found.clear();
    for (const PhonemeString& p : lex_.within_distance_one(ns.prefix, constraint)) {
      auto joined = rejoin(p, ns.suffix, ns.rule);
      if (joined && within_one_edit(*joined, word))
        found.push_back({std::move(*joined), Provenance::prefix_error, ns.rule});
    }
    if (found.empty()) continue;
    auto [it, fresh] = valid.try_emplace(ns.suffix, false);
    if (fresh) it->second = piece_valid(ns.suffix);
    if (!it->second) continue;
    std::move(found.begin(), found.end(), std::back_inserter(out));
  }
}

void SpellChecker::collect_boundary_error(PhonemeView word,
                                          std::vector<Suggestion>& out) const {
  const std::size_t n = word.size();
  auto prefixes = lex_.expected_prefixes(word);
  // Members one token longer than the word: the typo dropped the whole
  // boundary (maroo -> mar).
  const Automaton& fa = lex_.forward();
  if (auto state = fa.walk(word); state != Automaton::kNone) {
    for (const auto& e : fa.transitions(state)) {
      if (!fa.is_final(e.target)) continue;
      PhonemeString w(word.begin(), word.end());
      w.push_back(e.label);
      prefixes.push_back({n, std::move(w)});
    }
  }
  for (const auto& u : lex_.user_words()) {
    if (u.size() == n + 1 && std::equal(word.begin(), word.end(), u.begin()))
      prefixes.push_back({n, u});
  }
  if (prefixes.empty()) return;

  struct Flank {
    std::size_t start;
    PhonemeString word;
    bool marker;
  };
  std::vector<Flank> suffixes;
  for (ExpectedSuffix& e : lex_.expected_suffixes(word))
    suffixes.push_back({e.start, std::move(e.word), false});
  for (const Marker& m : markers_.entries()) {
    std::size_t tail = m.form.size() - 1;
    if (tail < n && std::equal(m.form.begin() + 1, m.form.end(),
                               word.end() - static_cast<std::ptrdiff_t>(tail)))
      suffixes.push_back({n - tail, m.form, true});
  }

  for (const ExpectedPrefix& p : prefixes) {
    for (const Flank& s : suffixes) {
      if (s.start < p.cut || s.start - p.cut > kMaxGap) continue;
      for (const JoinResult& j : join(p.word, s.word)) {
        if (within_one_edit(j.word, word))
          out.push_back({j.word, Provenance::boundary_error, j.rule});
      }
      if (s.marker) {
        auto joined = rejoin(p.word, s.word, std::nullopt);
        if (within_one_edit(*joined, word))
          out.push_back({std::move(*joined), Provenance::boundary_error,
                         std::nullopt});
      }
    }
  }
}

std::vector<Suggestion> SpellChecker::finish(std::vector<Suggestion> raw) const {
  // Group order, then roman spelling; the first provenance seen for a
  // candidate wins.
  std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
    return x.provenance < y.provenance;
  });
  std::vector<Suggestion> out;
  std::set<PhonemeString> seen;
  for (Suggestion& s : raw) {
    if (!seen.insert(s.candidate).second) continue;
    if (check(s.candidate).kind == VerdictKind::misspelt) continue;
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.provenance != y.provenance) return x.provenance < y.provenance;
    return render(x.candidate) < render(y.candidate);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i;
  return out;
}

std::vector<Suggestion> SpellChecker::suggest_root_edit(PhonemeView word) const {
  std::vector<Suggestion> raw;
  collect_root_edit(word, raw);
  return finish(std::move(raw));
}

std::vector<Suggestion> SpellChecker::suggest_suffix_error(
    PhonemeView word) const {
  std::vector<Suggestion> raw;
  collect_suffix_error(word, raw);
  return finish(std::move(raw));
}

std::vector<Suggestion> SpellChecker::suggest_prefix_error(
    PhonemeView word) const {
  std::vector<Suggestion> raw;
  collect_prefix_error(word, raw);
  return finish(std::move(raw));
}

std::vector<Suggestion> SpellChecker::suggest_boundary_error(
    PhonemeView word) const {
  std::vector<Suggestion> raw;
  collect_boundary_error(word, raw);
  return finish(std::move(raw));
}

std::vector<Suggestion> SpellChecker::suggest(
    PhonemeView word, const SuggestionMemory* memory) const {
  if (word.empty() || check(word).kind != VerdictKind::misspelt) return {};
  std::vector<Suggestion> raw;
  collect_root_edit(word, raw);
  collect_suffix_error(word, raw);
  collect_prefix_error(word, raw);
  collect_boundary_error(word, raw);
  auto out = finish(std::move(raw));

  if (memory) {
    if (auto chosen = memory->lookup(word)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Suggestion& s) {
        return s.candidate == *chosen;
      });
      if (it != out.end()) {
        std::rotate(out.begin(), it, it + 1);
        for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i;
      }
    }
  }
  return out;
}

}  // namespace kanspell
