// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "translit.hpp"

namespace kanspell {

// Token-level Levenshtein distance.
inline std::size_t edit_distance(PhonemeView a, PhonemeView b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

// edit_distance(a, b) <= 1 in linear time.
inline bool within_one_edit(PhonemeView a, PhonemeView b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (b.size() - a.size() > 1) return false;
  std::size_t head = 0;
  while (head < a.size() && a[head] == b[head]) ++head;
  if (head == a.size()) return true;
  if (a.size() == b.size())
    return std::equal(a.begin() + head + 1, a.end(), b.begin() + head + 1);
  return std::equal(a.begin() + head, a.end(), b.begin() + head + 1);
}

}  // namespace kanspell
