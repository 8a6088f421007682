// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kanspell {

enum class ErrorCode {
  invalid_argument,
  invalid_roman_input,
  unmappable_codepoint,
  empty_lexicon,
  rule_not_applicable,
  storage_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Byte offset (Kannada input) or character offset (roman input) of the
  // offending character, when the error is positional.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace kanspell
