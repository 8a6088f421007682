// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "morph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <string>

#include "error.hpp"

namespace kanspell {
namespace {

constexpr std::array<std::string_view, 3> kCategoryNames{"pratyaya", "plural",
                                                         "gender"};

constexpr std::array kAll{MarkerCategory::pratyaya, MarkerCategory::plural,
                          MarkerCategory::gender};
constexpr std::array kAfterPratyaya{MarkerCategory::plural,
                                    MarkerCategory::gender};
constexpr std::array kAfterPlural{MarkerCategory::gender};

// Categories that may still be stripped once `c` has been (the template is
// read right to left).
std::span<const MarkerCategory> allowed_after(MarkerCategory c) {
  switch (c) {
    case MarkerCategory::pratyaya:
      return kAfterPratyaya;
    case MarkerCategory::plural:
      return kAfterPlural;
    case MarkerCategory::gender:
      break;
  }
  return {};
}

std::string trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

class Search {
 public:
  Search(const Lexicon& lex, const MarkerList& markers, bool compound_roots)
      : lex_(lex), markers_(markers), compound_roots_(compound_roots) {}

  // Steps outermost first, or empty when no analysis exists.
  std::vector<StripStep> run(PhonemeView word,
                             std::span<const MarkerCategory> allowed) const {
    for (StripStep& step : strip_candidates(word, markers_, allowed)) {
      if (is_root(step.stem)) return {std::move(step)};
      auto next = allowed_after(step.marker.category);
      if (next.empty()) continue;
      auto rest = run(step.stem, next);
      if (!rest.empty()) {
        rest.insert(rest.begin(), std::move(step));
        return rest;
      }
    }
    return {};
  }

 private:
  bool is_root(PhonemeView stem) const {
    if (lex_.contains(stem)) return true;
    return compound_roots_ && !split(stem, lex_).empty();
  }

  const Lexicon& lex_;
  const MarkerList& markers_;
  bool compound_roots_;
};

std::vector<StripStep> find_path(PhonemeView word, const Lexicon& lex,
                                 const MarkerList& markers) {
  auto path = Search(lex, markers, false).run(word, kAll);
  // A compound root is a last resort: a word that is itself a sandhi of two
  // members reads as that sandhi, not as compound + marker.
  if (path.empty() && split(word, lex).empty())
    path = Search(lex, markers, true).run(word, kAll);
  return path;
}

}  // namespace

std::string_view category_name(MarkerCategory c) noexcept {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

std::optional<MarkerCategory> parse_category(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
    if (kCategoryNames[i] == s) return static_cast<MarkerCategory>(i);
  return std::nullopt;
}

MarkerList::MarkerList(std::vector<Marker> entries) {
  for (auto& m : entries) {
    if (m.form.empty())
      throw Error(ErrorCode::invalid_argument, "empty marker form");
    for (const auto& seen : entries_) {
      if (seen.form == m.form && seen.category == m.category) {
        throw Error(ErrorCode::invalid_argument,
                    "duplicate marker " + render(m.form));
      }
    }
    entries_.push_back(std::move(m));
  }
}

MarkerList MarkerList::parse(std::istream& in) {
  std::vector<Marker> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string text = trim(line);
    if (text.empty()) continue;
    auto tab = text.find('\t');
    auto category =
        tab == std::string::npos
            ? std::nullopt
            : parse_category(trim(std::string_view(text).substr(tab + 1)));
    if (!category) {
      throw Error(ErrorCode::invalid_argument,
                  "marker file line " + std::to_string(line_no) +
                      ": expected form<TAB>category");
    }
    entries.push_back({tokenize(trim(std::string_view(text).substr(0, tab))),
                       *category});
  }
  return MarkerList(std::move(entries));
}

MarkerList MarkerList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot open marker file " + path.string());
  return parse(in);
}

bool MarkerList::contains_form(PhonemeView form) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Marker& m) {
    return std::equal(m.form.begin(), m.form.end(), form.begin(), form.end());
  });
}

std::vector<StripStep> strip_candidates(
    PhonemeView word, const MarkerList& markers,
    std::span<const MarkerCategory> allowed) {
  std::vector<StripStep> out;
  for (const Marker& m : markers.entries()) {
    if (std::find(allowed.begin(), allowed.end(), m.category) == allowed.end())
      continue;
    if (word.size() > m.form.size() &&
        std::equal(m.form.rbegin(), m.form.rend(), word.rbegin())) {
      out.push_back({PhonemeString(word.begin(), word.end() - m.form.size()),
                     {m.form, m.category, std::nullopt}});
    }
    for (SplitResult& s : splits_with_suffix(word, m.form)) {
      if (s.prefix.size() > word.size() ||
          std::equal(s.prefix.begin(), s.prefix.end(), word.begin(), word.end()))
        continue;
      out.push_back({std::move(s.prefix), {m.form, m.category, s.rule}});
    }
  }
  return out;
}

std::optional<StripStep> strip_one(PhonemeView word, const MarkerList& markers,
                                   const Lexicon& lex) {
  auto path = find_path(word, lex, markers);
  if (path.empty()) return std::nullopt;
  return std::move(path.front());
}

std::optional<Analysis> analyze(PhonemeView word, const Lexicon& lex,
                                const MarkerList& markers) {
  auto path = find_path(word, lex, markers);
  if (path.empty()) return std::nullopt;
  Analysis a;
  a.root = path.back().stem;
  for (auto& step : path) a.stripped.push_back(std::move(step.marker));
  return a;
}

std::optional<PhonemeString> extract_root(PhonemeView word, const Lexicon& lex,
                                          const MarkerList& markers) {
  if (lex.contains(word)) return PhonemeString(word.begin(), word.end());
  if (auto a = analyze(word, lex, markers)) return std::move(a->root);
  auto splits = split(word, lex);
  if (!splits.empty()) return std::move(splits.front().prefix);
  return std::nullopt;
}

std::optional<PhonemeString> reconstruct(const Analysis& analysis) {
  PhonemeString word = analysis.root;
  for (auto it = analysis.stripped.rbegin(); it != analysis.stripped.rend();
       ++it) {
    if (it->junction) {
      auto joined = join_with(word, it->form, *it->junction);
      if (!joined) return std::nullopt;
      word = std::move(*joined);
    } else {
      word.insert(word.end(), it->form.begin(), it->form.end());
    }
  }
  return word;
}

}  // namespace kanspell
