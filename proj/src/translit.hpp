// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kanspell {

// Roman phoneme alphabet. Declaration order is the chart order: vowels,
// the two modifiers, then consonants.
enum class Token : std::uint8_t {
  a, aa, i, ii, u, uu, R, RR, e, ee, ai, o, oo, au,
  M, H,
  k, kh, g, gh, ng,
  c, ch, j, jh, ny,
  T, Th, D, Dh, N,
  t, th, d, dh, n,
  p, ph, b, bh, m,
  y, r, l, v, sh, Sh, s, h, L, rZ, Lz,
};

inline constexpr std::size_t kTokenCount = 52;

enum class TokenKind : std::uint8_t { vowel, consonant, modifier };

using PhonemeString = std::vector<Token>;
using PhonemeView = std::span<const Token>;

std::string_view symbol(Token t) noexcept;
TokenKind kind(Token t) noexcept;
inline bool is_vowel(Token t) noexcept { return kind(t) == TokenKind::vowel; }
inline bool is_consonant(Token t) noexcept {
  return kind(t) == TokenKind::consonant;
}
// Deergha: aa ii uu RR ee oo ai au.
bool is_long_vowel(Token t) noexcept;

// All tokens in chart order.
std::span<const Token> all_tokens() noexcept;
std::optional<Token> token_from_symbol(std::string_view s) noexcept;

// Plain concatenation of token symbols.
std::string render(PhonemeView word);

// Greedy longest-match over the token alphabet. Throws Error
// (invalid_roman_input) with the character position on failure.
PhonemeString tokenize(std::string_view roman);

// True when some adjacent pair would be merged by tokenize(render(.)),
// e.g. [a, i] -> "ai" -> [ai]. Such strings have no unambiguous roman
// spelling.
bool has_fusing_adjacency(PhonemeView word) noexcept;

// Kannada UTF-8 -> phonemes. Throws Error (unmappable_codepoint) with the
// byte offset of the first non-convertible codepoint.
PhonemeString to_roman(std::string_view kannada);

// Phonemes -> Kannada UTF-8. Exact inverse of to_roman on its image.
std::string to_kannada(PhonemeView word);

// Kannada letters, signs, virama, anusvara and visarga (not digits).
bool is_kannada_letter(char32_t cp) noexcept;

// Minimal UTF-8 helpers shared with the corpus tokenizer.
struct DecodedCodepoint {
  char32_t cp;
  std::size_t length;
};
// Returns nullopt on malformed input.
std::optional<DecodedCodepoint> decode_utf8(std::string_view s,
                                            std::size_t pos) noexcept;
void append_utf8(std::string& out, char32_t cp);

}  // namespace kanspell
