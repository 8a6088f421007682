// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "translit.hpp"

#include <array>

#include "error.hpp"

namespace kanspell {
namespace {

struct TokenInfo {
  std::string_view symbol;
  TokenKind kind;
  char32_t glyph;  // independent vowel, consonant letter or modifier sign
  char32_t sign;   // dependent vowel sign; 0 for 'a' and non-vowels
};

constexpr auto V = TokenKind::vowel;
constexpr auto C = TokenKind::consonant;
constexpr auto X = TokenKind::modifier;

constexpr std::array<TokenInfo, kTokenCount> kTable{{
    {"a", V, 0x0C85, 0},       {"aa", V, 0x0C86, 0x0CBE},
    {"i", V, 0x0C87, 0x0CBF},  {"ii", V, 0x0C88, 0x0CC0},
    {"u", V, 0x0C89, 0x0CC1},  {"uu", V, 0x0C8A, 0x0CC2},
    {"R", V, 0x0C8B, 0x0CC3},  {"RR", V, 0x0CE0, 0x0CC4},
    {"e", V, 0x0C8E, 0x0CC6},  {"ee", V, 0x0C8F, 0x0CC7},
    {"ai", V, 0x0C90, 0x0CC8}, {"o", V, 0x0C92, 0x0CCA},
    {"oo", V, 0x0C93, 0x0CCB}, {"au", V, 0x0C94, 0x0CCC},
    {"M", X, 0x0C82, 0},       {"H", X, 0x0C83, 0},
    {"k", C, 0x0C95, 0},       {"kh", C, 0x0C96, 0},
    {"g", C, 0x0C97, 0},       {"gh", C, 0x0C98, 0},
    {"ng", C, 0x0C99, 0},      {"c", C, 0x0C9A, 0},
    {"ch", C, 0x0C9B, 0},      {"j", C, 0x0C9C, 0},
    {"jh", C, 0x0C9D, 0},      {"ny", C, 0x0C9E, 0},
    {"T", C, 0x0C9F, 0},       {"Th", C, 0x0CA0, 0},
    {"D", C, 0x0CA1, 0},       {"Dh", C, 0x0CA2, 0},
    {"N", C, 0x0CA3, 0},       {"t", C, 0x0CA4, 0},
    {"th", C, 0x0CA5, 0},      {"d", C, 0x0CA6, 0},
    {"dh", C, 0x0CA7, 0},      {"n", C, 0x0CA8, 0},
    {"p", C, 0x0CAA, 0},       {"ph", C, 0x0CAB, 0},
    {"b", C, 0x0CAC, 0},       {"bh", C, 0x0CAD, 0},
    {"m", C, 0x0CAE, 0},       {"y", C, 0x0CAF, 0},
    {"r", C, 0x0CB0, 0},       {"l", C, 0x0CB2, 0},
    {"v", C, 0x0CB5, 0},       {"sh", C, 0x0CB6, 0},
    {"Sh", C, 0x0CB7, 0},      {"s", C, 0x0CB8, 0},
    {"h", C, 0x0CB9, 0},       {"L", C, 0x0CB3, 0},
    {"rZ", C, 0x0CB1, 0},      {"Lz", C, 0x0CDE, 0},
}};

static_assert(
    [] {
      for (const auto& t : kTable)
        if (t.symbol.empty()) return false;
      return true;
    }(),
    "token table does not cover the alphabet");

constexpr char32_t kVirama = 0x0CCD;
constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

constexpr std::array<Token, kTokenCount> make_all_tokens() {
  std::array<Token, kTokenCount> out{};
  for (std::size_t i = 0; i < kTokenCount; ++i) out[i] = static_cast<Token>(i);
  return out;
}
constexpr auto kAllTokens = make_all_tokens();

const TokenInfo& info(Token t) { return kTable[static_cast<std::size_t>(t)]; }

// Reverse lookup from Kannada codepoint (offset from U+0C80) to token.
struct GlyphIndex {
  std::array<std::int8_t, 128> letter;  // independent vowel/consonant/modifier
  std::array<std::int8_t, 128> sign;    // dependent vowel sign
  GlyphIndex() {
    letter.fill(-1);
    sign.fill(-1);
    for (std::size_t i = 0; i < kTokenCount; ++i) {
      letter[kTable[i].glyph - 0x0C80] = static_cast<std::int8_t>(i);
      if (kTable[i].sign != 0)
        sign[kTable[i].sign - 0x0C80] = static_cast<std::int8_t>(i);
    }
  }
};

const GlyphIndex& glyph_index() {
  static const GlyphIndex index;
  return index;
}

}  // namespace

std::string_view symbol(Token t) noexcept { return info(t).symbol; }
TokenKind kind(Token t) noexcept { return info(t).kind; }

bool is_long_vowel(Token t) noexcept {
  switch (t) {
    case Token::aa: case Token::ii: case Token::uu: case Token::RR:
    case Token::ee: case Token::oo: case Token::ai: case Token::au:
      return true;
    default:
      return false;
  }
}

std::span<const Token> all_tokens() noexcept { return kAllTokens; }

std::optional<Token> token_from_symbol(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kTokenCount; ++i)
    if (kTable[i].symbol == s) return static_cast<Token>(i);
  return std::nullopt;
}

std::string render(PhonemeView word) {
  std::string out;
  out.reserve(word.size() * 2);
  for (Token t : word) out += symbol(t);
  return out;
}

PhonemeString tokenize(std::string_view roman) {
  PhonemeString out;
  std::size_t pos = 0;
  while (pos < roman.size()) {
    if (pos + 1 < roman.size()) {
      if (auto t = token_from_symbol(roman.substr(pos, 2))) {
        out.push_back(*t);
        pos += 2;
        continue;
      }
    }
    auto t = token_from_symbol(roman.substr(pos, 1));
    if (!t) {
      throw Error(ErrorCode::invalid_roman_input,
                  "invalid roman input at position " + std::to_string(pos),
                  pos);
    }
    out.push_back(*t);
    ++pos;
  }
  return out;
}

bool has_fusing_adjacency(PhonemeView word) noexcept {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    std::string_view left = symbol(word[i]);
    if (left.size() != 1) continue;
    std::string joined{left};
    joined += symbol(word[i + 1]).front();
    if (token_from_symbol(joined)) return true;
  }
  return false;
}

bool is_kannada_letter(char32_t cp) noexcept {
  return cp >= 0x0C80 && cp <= 0x0CFF && !(cp >= 0x0CE6 && cp <= 0x0CEF);
}

std::optional<DecodedCodepoint> decode_utf8(std::string_view s,
                                            std::size_t pos) noexcept {
  if (pos >= s.size()) return std::nullopt;
  auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[pos + i]);
  };
  unsigned char b0 = byte(0);
  std::size_t len;
  char32_t cp;
  if (b0 < 0x80) return DecodedCodepoint{b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    if ((byte(i) & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (byte(i) & 0x3F);
  }
  return DecodedCodepoint{cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

PhonemeString to_roman(std::string_view kannada) {
  const GlyphIndex& index = glyph_index();
  PhonemeString out;
  bool open_consonant = false;  // consonant still waiting for its vowel
  auto unmappable = [](std::size_t pos) {
    return Error(ErrorCode::unmappable_codepoint,
                 "unmappable codepoint at byte " + std::to_string(pos), pos);
  };

  std::size_t pos = 0;
  while (pos < kannada.size()) {
    auto decoded = decode_utf8(kannada, pos);
    if (!decoded) throw unmappable(pos);
    char32_t cp = decoded->cp;

    if (cp == kZwj || cp == kZwnj) {
      pos += decoded->length;
      continue;
    }
    if (cp < 0x0C80 || cp > 0x0CFF) throw unmappable(pos);
    std::size_t slot = cp - 0x0C80;

    if (cp == kVirama) {
      if (!open_consonant) throw unmappable(pos);
      open_consonant = false;
    } else if (index.sign[slot] >= 0) {
      if (!open_consonant) throw unmappable(pos);
      out.push_back(static_cast<Token>(index.sign[slot]));
      open_consonant = false;
    } else if (index.letter[slot] >= 0) {
      Token t = static_cast<Token>(index.letter[slot]);
      if (open_consonant) out.push_back(Token::a);
      out.push_back(t);
      open_consonant = is_consonant(t);
    } else {
      throw unmappable(pos);
    }
    pos += decoded->length;
  }
  if (open_consonant) out.push_back(Token::a);
  return out;
}

std::string to_kannada(PhonemeView word) {
  std::string out;
  bool after_consonant = false;
  for (Token t : word) {
    const TokenInfo& ti = info(t);
    switch (ti.kind) {
      case TokenKind::vowel:
        if (after_consonant) {
          if (t != Token::a) append_utf8(out, ti.sign);
        } else {
          append_utf8(out, ti.glyph);
        }
        after_consonant = false;
        break;
      case TokenKind::consonant:
        if (after_consonant) append_utf8(out, kVirama);
        append_utf8(out, ti.glyph);
        after_consonant = true;
        break;
      case TokenKind::modifier:
        if (after_consonant) append_utf8(out, kVirama);
        append_utf8(out, ti.glyph);
        after_consonant = false;
        break;
    }
  }
  if (after_consonant) append_utf8(out, kVirama);
  return out;
}

}  // namespace kanspell
