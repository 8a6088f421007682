// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sandhi.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <set>
#include <string>

#include "error.hpp"

namespace kanspell {
namespace {

using T = Token;

constexpr std::array<std::string_view, kRuleCount> kRuleNames{
    "savarNa_deergha", "guNa", "vRddhi", "yaN", "aadeesha", "aagama", "loopa"};

const std::vector<Token>& vowels() {
  static const std::vector<Token> v{T::a,  T::aa, T::i,  T::ii, T::u,
                                    T::uu, T::R,  T::RR, T::e,  T::ee,
                                    T::ai, T::o,  T::oo, T::au};
  return v;
}

// Order in which an elided prefix vowel is restored.
const std::vector<Token>& loopa_restoration_order() {
  static const std::vector<Token> v = [] {
    std::vector<Token> out{T::u, T::a, T::i, T::e};
    for (Token t : vowels())
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return out;
  }();
  return v;
}

std::vector<SandhiRule> build_rule_table() {
  std::vector<SandhiRule> table;
  auto add_rule = [&](Rule r) -> std::vector<SandhiCase>& {
    table.push_back({r, rule_origin(r), {}});
    return table.back().cases;
  };

  auto& savarna = add_rule(Rule::savarna_deergha);
  for (auto [s, l] : {std::pair{T::a, T::aa}, {T::i, T::ii}, {T::u, T::uu},
                      {T::R, T::RR}})
    for (Token p : {s, l})
      for (Token q : {s, l})
        savarna.push_back({Rule::savarna_deergha, p, q, {l}});

  auto& guna = add_rule(Rule::guna);
  for (Token p : {T::a, T::aa}) {
    for (Token q : {T::i, T::ii}) guna.push_back({Rule::guna, p, q, {T::ee}});
    for (Token q : {T::u, T::uu}) guna.push_back({Rule::guna, p, q, {T::oo}});
  }

  auto& vrddhi = add_rule(Rule::vrddhi);
  for (Token p : {T::a, T::aa}) {
    for (Token q : {T::e, T::ee})
      vrddhi.push_back({Rule::vrddhi, p, q, {T::ai}});
    for (Token q : {T::o, T::oo})
      vrddhi.push_back({Rule::vrddhi, p, q, {T::au}});
  }

  auto& yan = add_rule(Rule::yan);
  for (auto [p, glide] : {std::pair{T::i, T::y}, {T::ii, T::y}, {T::u, T::v},
                          {T::uu, T::v}}) {
    for (Token q : vowels()) {
      bool same_class = glide == T::y ? (q == T::i || q == T::ii)
                                      : (q == T::u || q == T::uu);
      if (same_class) continue;
      yan.push_back({Rule::yan, p, q, {glide, q}, false, true});
    }
  }

  auto& aadeesha = add_rule(Rule::aadeesha);
  for (auto [q, voiced] : {std::pair{T::k, T::g}, {T::t, T::d}, {T::p, T::b}})
    aadeesha.push_back({Rule::aadeesha, std::nullopt, q, {voiced}});

  auto& aagama = add_rule(Rule::aagama);
  for (Token p : {T::i, T::ii, T::e, T::ee, T::ai, T::a, T::aa, T::u, T::uu,
                  T::o, T::oo}) {
    bool front = p == T::i || p == T::ii || p == T::e || p == T::ee ||
                 p == T::ai;
    Token glide = front ? T::y : T::v;
    for (Token q : vowels())
      aagama.push_back({Rule::aagama, p, q, {p, glide, q}, true, true});
  }

  auto& loopa = add_rule(Rule::loopa);
  for (Token p : loopa_restoration_order())
    for (Token q : vowels()) loopa.push_back({Rule::loopa, p, q, {q}});

  return table;
}

// (rule, prefix last token, suffix first token) -> case, or null.
using CaseIndex =
    std::array<const SandhiCase*, kRuleCount * kTokenCount * kTokenCount>;

CaseIndex build_case_index() {
  CaseIndex index{};
  for (const SandhiRule& rule : rule_table()) {
    for (const SandhiCase& c : rule.cases) {
      for (Token p : all_tokens()) {
        if (c.prefix_end && *c.prefix_end != p) continue;
        std::size_t slot =
            (static_cast<std::size_t>(c.rule) * kTokenCount +
             static_cast<std::size_t>(p)) * kTokenCount +
            static_cast<std::size_t>(c.suffix_begin);
        if (!index[slot]) index[slot] = &c;
      }
    }
  }
  return index;
}

const SandhiCase* find_case(Rule rule, Token prefix_last, Token suffix_first) {
  static const CaseIndex index = build_case_index();
  return index[(static_cast<std::size_t>(rule) * kTokenCount +
                static_cast<std::size_t>(prefix_last)) * kTokenCount +
               static_cast<std::size_t>(suffix_first)];
}

struct IndexedCandidate {
  ReverseCandidate candidate;
  // For candidates that carry the suffix's first token through unchanged:
  // the tokens allowed right after the sandhi letter.
  std::bitset<kTokenCount> carry_next;
  bool carries = false;
};

using ReverseIndex = std::array<std::vector<IndexedCandidate>, kTokenCount>;

ReverseIndex build_reverse_index() {
  ReverseIndex index;
  for (const SandhiRule& rule : rule_table()) {
    for (const SandhiCase& c : rule.cases) {
      auto first = c.boundary.begin() + (c.keeps_prefix_end ? 1 : 0);
      auto last = c.boundary.end() - (c.keeps_suffix_begin ? 1 : 0);
      // Every case reduces to exactly one sandhi letter.
      if (last - first != 1) throw std::logic_error("malformed sandhi case");

      ReverseCandidate rc{c.rule, *first, {}, {}};
      if (!c.keeps_prefix_end && c.prefix_end) rc.prefix_end = {*c.prefix_end};
      if (!c.keeps_suffix_begin) rc.suffix_begin = {c.suffix_begin};

      auto& bucket = index[static_cast<std::size_t>(rc.letter)];
      auto it = std::find_if(bucket.begin(), bucket.end(), [&](const auto& e) {
        return e.candidate == rc;
      });
      if (it == bucket.end()) {
        bucket.push_back({rc, {}, c.keeps_suffix_begin});
        it = bucket.end() - 1;
      }
      if (c.keeps_suffix_begin)
        it->carry_next.set(static_cast<std::size_t>(c.suffix_begin));
    }
  }
  for (auto& bucket : index) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const auto& x, const auto& y) {
                       if (x.candidate.rule != y.candidate.rule)
                         return x.candidate.rule < y.candidate.rule;
                       return x.candidate.prefix_end.size() >
                              y.candidate.prefix_end.size();
                     });
  }
  return index;
}

const ReverseIndex& reverse_index() {
  static const ReverseIndex index = build_reverse_index();
  return index;
}

bool same(PhonemeView a, PhonemeView b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// Whether joining the prefix and suffix that `rc` reads off at `cut`
// reproduces the word. Works on spans of the word, without building either
// side or the join.
bool reproduces(PhonemeView word, std::size_t cut, const ReverseCandidate& rc) {
  PhonemeView tail = word.subspan(cut + 1);
  const bool has_end = !rc.prefix_end.empty();
  Token last;
  if (has_end) {
    last = rc.prefix_end.front();
  } else if (cut > 0) {
    last = word[cut - 1];
  } else {
    return false;
  }
  Token first;
  PhonemeView rest;  // the suffix without its first token
  if (!rc.suffix_begin.empty()) {
    first = rc.suffix_begin.front();
    rest = tail;
  } else if (!tail.empty()) {
    first = tail.front();
    rest = tail.subspan(1);
  } else {
    return false;
  }
  const SandhiCase* c = find_case(rc.rule, last, first);
  if (!c) return false;
  // join = prefix (minus its last token when the case consumes it)
  //        + boundary + rest
  std::size_t pos = cut + (has_end ? 1 : 0);
  if (c->prefix_end) {
    if (pos == 0) return false;
    --pos;
  } else if (has_end && word[cut] != last) {
    return false;
  }
  if (pos + c->boundary.size() + rest.size() != word.size()) return false;
  auto at = word.begin() + static_cast<std::ptrdiff_t>(pos);
  if (!std::equal(c->boundary.begin(), c->boundary.end(), at)) return false;
  return std::equal(rest.begin(), rest.end(),
                    at + static_cast<std::ptrdiff_t>(c->boundary.size()));
}

// Tries every candidate for the sandhi letter at `cut`, keeping those whose
// forward join reproduces the word, whose prefix passes `prefix_ok` and whose
// suffix passes `suffix_ok`.
template <class PrefixOk, class SuffixOk>
void splits_at(PhonemeView word, std::size_t cut, PrefixOk&& prefix_ok,
               SuffixOk&& suffix_ok, std::vector<SplitResult>& out) {
  if (cut >= word.size()) return;
  PhonemeView head = word.first(cut);
  PhonemeView tail = word.subspan(cut + 1);
  PhonemeString prefix, suffix;
  for (const auto& e : reverse_index()[static_cast<std::size_t>(word[cut])]) {
    if (e.carries && !tail.empty() &&
        !e.carry_next.test(static_cast<std::size_t>(tail.front())))
      continue;
    const ReverseCandidate& rc = e.candidate;
    if (!reproduces(word, cut, rc)) continue;
    prefix.assign(head.begin(), head.end());
    prefix.insert(prefix.end(), rc.prefix_end.begin(), rc.prefix_end.end());
    suffix.assign(rc.suffix_begin.begin(), rc.suffix_begin.end());
    suffix.insert(suffix.end(), tail.begin(), tail.end());
    if (!prefix_ok(prefix) || !suffix_ok(suffix)) continue;
    out.push_back({prefix, suffix, rc.rule, cut});
  }
}

}  // namespace

std::string_view rule_name(Rule rule) noexcept {
  return kRuleNames[static_cast<std::size_t>(rule)];
}

std::optional<Rule> parse_rule(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  return std::nullopt;
}

Origin rule_origin(Rule rule) noexcept {
  return rule <= Rule::yan ? Origin::sanskrit : Origin::kannada;
}

const std::vector<SandhiRule>& rule_table() {
  static const std::vector<SandhiRule> table = build_rule_table();
  return table;
}

std::optional<PhonemeString> join_with(PhonemeView prefix, PhonemeView suffix,
                                       Rule rule) {
  if (prefix.empty() || suffix.empty()) return std::nullopt;
  const SandhiCase* c = find_case(rule, prefix.back(), suffix.front());
  if (!c) return std::nullopt;
  PhonemeString out;
  out.reserve(prefix.size() + suffix.size() + 1);
  out.insert(out.end(), prefix.begin(), prefix.end() - (c->prefix_end ? 1 : 0));
  out.insert(out.end(), c->boundary.begin(), c->boundary.end());
  out.insert(out.end(), suffix.begin() + 1, suffix.end());
  return out;
}

std::vector<JoinResult> join(PhonemeView prefix, PhonemeView suffix,
                             std::optional<Rule> rule) {
  if (prefix.empty() || suffix.empty())
    throw Error(ErrorCode::invalid_argument, "join needs a prefix and a suffix");
  std::vector<JoinResult> out;
  for (std::size_t r = 0; r < kRuleCount; ++r) {
    Rule candidate = static_cast<Rule>(r);
    if (rule && *rule != candidate) continue;
    if (auto word = join_with(prefix, suffix, candidate))
      out.push_back({std::move(*word), candidate});
  }
  if (rule && out.empty()) {
    throw Error(ErrorCode::rule_not_applicable,
                std::string(rule_name(*rule)) + " does not apply to " +
                    render(prefix) + " + " + render(suffix));
  }
  return out;
}

std::vector<ReverseCandidate> reverse_candidates(PhonemeView window) {
  std::vector<ReverseCandidate> out;
  if (window.empty()) return out;
  for (const auto& e : reverse_index()[static_cast<std::size_t>(window[0])]) {
    // A one-token window says nothing about the carried vowel.
    if (e.carries && window.size() > 1 &&
        !e.carry_next.test(static_cast<std::size_t>(window[1])))
      continue;
    out.push_back(e.candidate);
  }
  return out;
}

std::vector<SplitResult> candidate_splits(PhonemeView word) {
  std::vector<SplitResult> out;
  auto any = [](const PhonemeString&) { return true; };
  for (std::size_t cut = 0; cut < word.size(); ++cut)
    splits_at(word, cut, any, any, out);
  return out;
}

std::vector<SplitResult> splits_with_suffix(PhonemeView word,
                                            PhonemeView suffix) {
  std::vector<SplitResult> out;
  if (suffix.empty() || word.size() < suffix.size()) return out;
  auto any = [](const PhonemeString&) { return true; };
  auto is_suffix = [&](const PhonemeString& s) { return same(s, suffix); };
  // The suffix is suffix_begin (at most one token) + word[cut + 1, end), so
  // only two cuts can produce it, and only when the word ends right.
  const std::size_t n = word.size();
  if (n > suffix.size() && same(word.last(suffix.size()), suffix))
    splits_at(word, n - suffix.size() - 1, any, is_suffix, out);
  if (same(word.last(suffix.size() - 1), suffix.subspan(1)))
    splits_at(word, n - suffix.size(), any, is_suffix, out);
  return out;
}

void sort_splits(std::vector<SplitResult>& splits) {
  std::stable_sort(splits.begin(), splits.end(),
                   [](const SplitResult& x, const SplitResult& y) {
                     if (x.prefix.size() != y.prefix.size())
                       return x.prefix.size() > y.prefix.size();
                     if (x.rule != y.rule) return x.rule < y.rule;
                     return x.suffix.size() > y.suffix.size();
                   });
}

std::vector<SplitResult> split(PhonemeView word, const Lexicon& lex,
                               const SuffixValidator& validator) {
  std::vector<SplitResult> out;
  if (word.size() < 2) return out;

  // Each expected prefix E = word[0, cut) + E.back() proposes the cut where
  // its final letter meets the remainder. When E also matches the word
  // verbatim, the sandhi letter may instead follow E (inserted glide,
  // voiced stop), so the next cut is proposed too.
  std::set<std::size_t, std::greater<>> cuts;
  for (const ExpectedPrefix& e : lex.expected_prefixes(word)) {
    cuts.insert(e.cut);
    if (e.word.back() == word[e.cut]) cuts.insert(e.cut + 1);
  }

  auto in_lexicon = [&](const PhonemeString& w) { return lex.contains(w); };
  auto suffix_ok = [&](const PhonemeString& s) {
    return validator ? validator(s) : lex.contains(s);
  };
  for (std::size_t cut : cuts) splits_at(word, cut, in_lexicon, suffix_ok, out);
  sort_splits(out);
  return out;
}

std::vector<std::size_t> sandhi_points(PhonemeView word) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    bool cluster = i + 1 < word.size() && is_consonant(word[i]) &&
                   is_consonant(word[i + 1]);
    if (is_long_vowel(word[i]) || cluster) out.push_back(i);
  }
  return out;
}

std::vector<SplitResult> split_by_place(PhonemeView word, const Lexicon& lex) {
  std::vector<SplitResult> out;
  std::set<std::size_t> cuts;
  for (std::size_t p : sandhi_points(word)) {
    cuts.insert(p);
    // In a cluster the glide or voiced stop is the second consonant.
    if (is_consonant(word[p])) cuts.insert(p + 1);
  }
  auto in_lexicon = [&](const PhonemeString& w) { return lex.contains(w); };
  for (std::size_t cut : cuts) splits_at(word, cut, in_lexicon, in_lexicon, out);
  sort_splits(out);
  return out;
}

std::vector<SplitResult> split_prefix_suffix(PhonemeView word,
                                             const Lexicon& lex) {
  std::vector<SplitResult> out;
  auto prefixes = lex.expected_prefixes(word);
  auto suffixes = lex.expected_suffixes(word);
  if (prefixes.empty() || suffixes.empty()) return out;

  const std::size_t longest_prefix = prefixes.front().word.size();
  const std::size_t longest_suffix = suffixes.front().word.size();
  for (const auto& e : prefixes) {
    if (e.word.size() != longest_prefix) break;
    for (const auto& f : suffixes) {
      if (f.word.size() != longest_suffix) break;
      // The letters between the two spans must be what some rule produces.
      for (std::size_t r = 0; r < kRuleCount; ++r) {
        Rule rule = static_cast<Rule>(r);
        auto joined = join_with(e.word, f.word, rule);
        if (!joined || !same(*joined, word)) continue;
        const SandhiCase* c = find_case(rule, e.word.back(), f.word.front());
        std::size_t letter = (c->keeps_prefix_end || !c->prefix_end)
                                 ? e.word.size()
                                 : e.word.size() - 1;
        out.push_back({e.word, f.word, rule, letter});
      }
    }
  }
  sort_splits(out);
  return out;
}

}  // namespace kanspell
