// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "lexicon.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "distance.hpp"
#include "error.hpp"

namespace kanspell {
namespace {

struct BuildNode {
  bool final = false;
  std::vector<Automaton::Transition> edges;
};

std::string signature(const BuildNode& node) {
  std::string key;
  key.reserve(1 + node.edges.size() * 5);
  key += node.final ? '1' : '0';
  for (const auto& e : node.edges) {
    key += static_cast<char>(e.label);
    key.append(reinterpret_cast<const char*>(&e.target), sizeof(e.target));
  }
  return key;
}

}  // namespace

Automaton Automaton::from_sorted(std::span<const PhonemeString> words) {
  std::vector<BuildNode> nodes(1);
  std::unordered_map<std::string, StateId> registry;
  std::vector<StateId> path{0};
  PhonemeView previous;

  // Replace or register every state on the current path deeper than `keep`.
  auto minimize = [&](std::size_t keep) {
    while (path.size() > keep + 1) {
      StateId child = path.back();
      path.pop_back();
      auto [it, inserted] = registry.try_emplace(signature(nodes[child]), child);
      if (!inserted) {
        nodes[path.back()].edges.back().target = it->second;
        nodes[child] = BuildNode{};
      }
    }
  };

  for (const PhonemeString& word : words) {
    std::size_t common = 0;
    while (common < word.size() && common < previous.size() &&
           word[common] == previous[common])
      ++common;
    minimize(common);
    for (std::size_t i = common; i < word.size(); ++i) {
      auto id = static_cast<StateId>(nodes.size());
      nodes.emplace_back();
      nodes[path.back()].edges.push_back({word[i], id});
      path.push_back(id);
    }
    nodes[path.back()].final = true;
    previous = word;
  }
  minimize(0);

  // Compact the reachable states into CSR form, root first.
  std::vector<StateId> remap(nodes.size(), kNone);
  std::vector<StateId> order{0};
  remap[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& e : nodes[order[head]].edges) {
      if (remap[e.target] == kNone) {
        remap[e.target] = static_cast<StateId>(order.size());
        order.push_back(e.target);
      }
    }
  }

  Automaton out;
  out.offsets_.reserve(order.size() + 1);
  out.final_.reserve(order.size());
  out.offsets_.push_back(0);
  for (StateId old : order) {
    for (const auto& e : nodes[old].edges)
      out.edges_.push_back({e.label, remap[e.target]});
    out.offsets_.push_back(static_cast<std::uint32_t>(out.edges_.size()));
    out.final_.push_back(nodes[old].final);
  }
  return out;
}

Automaton::StateId Automaton::next(StateId state,
                                   Token label) const noexcept {
  for (const auto& e : transitions(state))
    if (e.label == label) return e.target;
  return kNone;
}

Automaton::StateId Automaton::walk(PhonemeView word) const noexcept {
  if (final_.empty()) return kNone;
  StateId state = root();
  for (Token t : word) {
    state = next(state, t);
    if (state == kNone) break;
  }
  return state;
}

bool Automaton::contains(PhonemeView word) const noexcept {
  StateId state = walk(word);
  return state != kNone && is_final(state);
}

std::uint64_t Automaton::trie_state_count() const {
  // Trie nodes correspond one-to-one with root paths; states are numbered in
  // BFS order, which is not topological, so count paths by memoized DFS.
  if (final_.empty()) return 0;
  std::vector<std::uint64_t> paths(state_count(), 0);
  std::vector<std::uint32_t> indegree(state_count(), 0);
  for (const auto& e : edges_) ++indegree[e.target];
  std::vector<StateId> ready{root()};
  paths[root()] = 1;
  std::uint64_t total = 0;
  while (!ready.empty()) {
    StateId s = ready.back();
    ready.pop_back();
    total += paths[s];
    for (const auto& e : transitions(s)) {
      paths[e.target] += paths[s];
      if (--indegree[e.target] == 0) ready.push_back(e.target);
    }
  }
  return total;
}

std::vector<PhonemeString> Automaton::words() const {
  std::vector<PhonemeString> out;
  if (final_.empty()) return out;
  PhonemeString path;
  auto visit = [&](auto& self, StateId s) -> void {
    if (is_final(s)) out.push_back(path);
    for (const auto& e : transitions(s)) {
      path.push_back(e.label);
      self(self, e.target);
      path.pop_back();
    }
  };
  visit(visit, root());
  return out;
}

bool DistanceConstraint::admits(PhonemeView word) const noexcept {
  switch (mode_) {
    case Mode::none:
      return true;
    case Mode::first_token_fixed:
      return !word.empty() && word.front() == token_;
    case Mode::last_token_fixed:
      return !word.empty() && word.back() == token_;
  }
  return false;
}

Lexicon Lexicon::build(std::vector<PhonemeString> words) {
  std::erase_if(words, [](const PhonemeString& w) { return w.empty(); });
  if (words.empty())
    throw Error(ErrorCode::empty_lexicon, "lexicon has no words");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  auto base = std::make_shared<Base>();
  base->word_count = words.size();
  base->forward = Automaton::from_sorted(words);
  for (auto& w : words) std::reverse(w.begin(), w.end());
  std::sort(words.begin(), words.end());
  base->reverse = Automaton::from_sorted(words);

  Lexicon lex;
  lex.base_ = std::move(base);
  return lex;
}

bool Lexicon::contains(PhonemeView word) const {
  if (word.empty()) return false;
  return forward().contains(word) ||
         user_.contains(PhonemeString(word.begin(), word.end()));
}

std::vector<PhonemeString> Lexicon::prefixes(PhonemeView word) const {
  std::vector<PhonemeString> out;
  Automaton::StateId state = forward().root();
  for (std::size_t k = 0; k < word.size(); ++k) {
    state = forward().next(state, word[k]);
    if (state == Automaton::kNone) break;
    if (forward().is_final(state))
      out.emplace_back(word.begin(), word.begin() + k + 1);
  }
  for (const auto& u : user_) {
    if (u.size() <= word.size() && std::equal(u.begin(), u.end(), word.begin()))
      out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() > y.size();
  });
  return out;
}

std::vector<PhonemeString> Lexicon::suffixes(PhonemeView word) const {
  std::vector<PhonemeString> out;
  Automaton::StateId state = reverse().root();
  for (std::size_t m = 1; m <= word.size(); ++m) {
    state = reverse().next(state, word[word.size() - m]);
    if (state == Automaton::kNone) break;
    if (reverse().is_final(state))
      out.emplace_back(word.end() - static_cast<std::ptrdiff_t>(m), word.end());
  }
  for (const auto& u : user_) {
    if (u.size() <= word.size() && std::equal(u.rbegin(), u.rend(), word.rbegin()))
      out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() > y.size();
  });
  return out;
}

std::vector<PhonemeString> Lexicon::within_distance_one(
    PhonemeView word, DistanceConstraint c) const {
  const Automaton& fa = forward();
  std::vector<PhonemeString> out;
  PhonemeString path;
  const bool fixed_first =
      c.mode() == DistanceConstraint::Mode::first_token_fixed;

  auto may_take = [&](Token label) {
    return !fixed_first || !path.empty() || label == c.token();
  };

  // Depth-first walk with a budget of one edit.
  auto search = [&](auto& self, Automaton::StateId s, std::size_t pos,
                    bool edited) -> void {
    if (pos == word.size() && fa.is_final(s)) out.push_back(path);
    if (!edited) {
      for (const auto& e : fa.transitions(s)) {  // extra token in the member
        if (!may_take(e.label)) continue;
        path.push_back(e.label);
        self(self, e.target, pos, true);
        path.pop_back();
      }
    }
    if (pos == word.size()) return;
    for (const auto& e : fa.transitions(s)) {
      bool same = e.label == word[pos];
      if ((!same && edited) || !may_take(e.label)) continue;
      path.push_back(e.label);
      self(self, e.target, pos + 1, edited || !same);
      path.pop_back();
    }
    if (!edited) self(self, s, pos + 1, true);  // token missing from member
  };
  search(search, fa.root(), 0, false);

  for (const auto& u : user_)
    if (within_one_edit(u, word)) out.push_back(u);

  std::erase_if(out, [&](const PhonemeString& w) { return !c.admits(w); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ExpectedPrefix> Lexicon::expected_prefixes(PhonemeView word) const {
  const Automaton& fa = forward();
  std::vector<ExpectedPrefix> out;
  Automaton::StateId state = fa.root();
  for (std::size_t k = 0; k < word.size(); ++k) {
    for (const auto& e : fa.transitions(state)) {
      if (!fa.is_final(e.target)) continue;
      PhonemeString w(word.begin(), word.begin() + k);
      w.push_back(e.label);
      out.push_back({k, std::move(w)});
    }
    state = fa.next(state, word[k]);
    if (state == Automaton::kNone) break;
  }
  for (const auto& u : user_) {
    std::size_t cut = u.size() - 1;
    if (cut < word.size() && std::equal(u.begin(), u.end() - 1, word.begin()))
      out.push_back({cut, u});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.cut != y.cut ? x.cut > y.cut : x.word < y.word;
  });
  return out;
}

std::vector<ExpectedSuffix> Lexicon::expected_suffixes(PhonemeView word) const {
  const Automaton& ra = reverse();
  std::vector<ExpectedSuffix> out;
  Automaton::StateId state = ra.root();
  const std::size_t n = word.size();
  for (std::size_t m = 0; m < n; ++m) {
    for (const auto& e : ra.transitions(state)) {
      if (!ra.is_final(e.target)) continue;
      PhonemeString w;
      w.reserve(m + 1);
      w.push_back(e.label);
      w.insert(w.end(), word.end() - static_cast<std::ptrdiff_t>(m), word.end());
      out.push_back({n - m, std::move(w)});
    }
    state = ra.next(state, word[n - 1 - m]);
    if (state == Automaton::kNone) break;
  }
  for (const auto& u : user_) {
    std::size_t tail = u.size() - 1;
    if (tail < n && std::equal(u.begin() + 1, u.end(), word.end() - static_cast<std::ptrdiff_t>(tail)))
      out.push_back({n - tail, u});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.start != y.start ? x.start < y.start : x.word < y.word;
  });
  return out;
}

std::size_t Lexicon::prefix_depth(PhonemeView word) const {
  const Automaton& fa = forward();
  std::size_t depth = 0;
  Automaton::StateId state = fa.root();
  while (depth < word.size()) {
    state = fa.next(state, word[depth]);
    if (state == Automaton::kNone) break;
    ++depth;
  }
  for (const auto& u : user_) {
    auto [a, b] = std::mismatch(u.begin(), u.end(), word.begin(), word.end());
    depth = std::max(depth, static_cast<std::size_t>(b - word.begin()));
  }
  return depth;
}

bool Lexicon::add_word(PhonemeString word) {
  if (word.empty() || contains(word)) return false;
  user_.insert(std::move(word));
  return true;
}

LexiconStats Lexicon::stats() const {
  LexiconStats s;
  s.word_count = word_count();
  s.forward_states = forward().state_count();
  s.reverse_states = reverse().state_count();
  s.trie_states = forward().trie_state_count();
  return s;
}

}  // namespace kanspell
