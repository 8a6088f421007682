// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "kanspell/kanspell.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"
#include "error.hpp"

struct ks_engine {
  explicit ks_engine(kanspell::EngineConfig c) : engine(std::move(c)) {}
  kanspell::Engine engine;
};

namespace {

thread_local std::string g_last_error;

ks_status to_status(kanspell::ErrorCode code) {
  using kanspell::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return KS_INVALID_ARGUMENT;
    case ErrorCode::invalid_roman_input: return KS_INVALID_ROMAN_INPUT;
    case ErrorCode::unmappable_codepoint: return KS_UNMAPPABLE_CODEPOINT;
    case ErrorCode::empty_lexicon: return KS_EMPTY_LEXICON;
    case ErrorCode::rule_not_applicable: return KS_RULE_NOT_APPLICABLE;
    case ErrorCode::storage_error: return KS_STORAGE_ERROR;
    case ErrorCode::io_error: return KS_IO_ERROR;
  }
  return KS_INTERNAL_ERROR;
}

ks_status fail(ks_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
ks_status guard(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const kanspell::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KS_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(KS_INTERNAL_ERROR, e.what());
  }
}

ks_status need(bool ok, const char* what) {
  return ok ? KS_OK : fail(KS_INVALID_ARGUMENT, what);
}

template <class Produce>
ks_status emit(char** out, Produce&& produce) {
  if (!out) return fail(KS_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guard([&] {
    *out = dup(produce());
    return KS_OK;
  });
}

// Word-in, JSON-out entry points.
template <class Method>
ks_status word_call(ks_engine* engine, const char* word, char** out,
                    Method method) {
  if (ks_status s = need(engine && word, "null engine or word")) return s;
  return emit(out, [&] { return (engine->engine.*method)(word).dump(); });
}

}  // namespace

extern "C" {

const char* ks_status_name(ks_status status) {
  switch (status) {
    case KS_OK: return "ok";
    case KS_INVALID_ARGUMENT: return "invalid_argument";
    case KS_INVALID_ROMAN_INPUT: return "invalid_roman_input";
    case KS_UNMAPPABLE_CODEPOINT: return "unmappable_codepoint";
    case KS_EMPTY_LEXICON: return "empty_lexicon";
    case KS_RULE_NOT_APPLICABLE: return "rule_not_applicable";
    case KS_STORAGE_ERROR: return "storage_error";
    case KS_IO_ERROR: return "io_error";
    case KS_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* ks_last_error(void) { return g_last_error.c_str(); }

ks_status ks_engine_open(const ks_config* config, ks_engine** out) {
  if (!out) return fail(KS_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (ks_status s = need(config && config->lexicon_path && config->markers_path,
                         "lexicon and marker paths are required"))
    return s;
  return guard([&] {
    kanspell::EngineConfig c;
    c.lexicon = config->lexicon_path;
    c.markers = config->markers_path;
    if (config->memory_path) c.memory = config->memory_path;
    if (config->user_lexicon_path) c.user_lexicon = config->user_lexicon_path;
    c.accept_roman = config->accept_roman != 0;
    *out = new ks_engine(std::move(c));
    return KS_OK;
  });
}

void ks_engine_close(ks_engine* engine) { delete engine; }

ks_status ks_check(ks_engine* engine, const char* word, char** out) {
  return word_call(engine, word, out, &kanspell::Engine::check);
}

ks_status ks_split(ks_engine* engine, const char* word, char** out) {
  return word_call(engine, word, out, &kanspell::Engine::split);
}

ks_status ks_root(ks_engine* engine, const char* word, char** out) {
  return word_call(engine, word, out, &kanspell::Engine::root);
}

ks_status ks_suggest(ks_engine* engine, const char* word, char** out) {
  return word_call(engine, word, out, &kanspell::Engine::suggest);
}

ks_status ks_corpus(ks_engine* engine, const char* text, char** out) {
  return word_call(engine, text, out, &kanspell::Engine::corpus);
}

ks_status ks_join(ks_engine* engine, const char* prefix, const char* suffix,
                  const char* rule, char** out) {
  if (ks_status s = need(engine && prefix && suffix, "null engine or word"))
    return s;
  return emit(out, [&] {
    return engine->engine.join(prefix, suffix, rule ? rule : "").dump();
  });
}

ks_status ks_stats(ks_engine* engine, char** out) {
  if (ks_status s = need(engine, "null engine")) return s;
  return emit(out, [&] { return engine->engine.stats().dump(); });
}

ks_status ks_record_choice(ks_engine* engine, const char* misspelt,
                           const char* chosen) {
  if (ks_status s = need(engine && misspelt && chosen, "null engine or word"))
    return s;
  return guard([&] {
    engine->engine.record_choice(kanspell::parse_word(misspelt).tokens,
                                 kanspell::parse_word(chosen).tokens);
    return KS_OK;
  });
}

ks_status ks_add_word(ks_engine* engine, const char* word, int* added) {
  if (ks_status s = need(engine && word, "null engine or word")) return s;
  return guard([&] {
    bool fresh = engine->engine.add_word(kanspell::parse_word(word).tokens);
    if (added) *added = fresh ? 1 : 0;
    return KS_OK;
  });
}

ks_status ks_rules_tsv(char** out) {
  return emit(out, [] { return kanspell::rules_tsv(); });
}

ks_status ks_to_roman(const char* kannada, char** out) {
  if (ks_status s = need(kannada, "null text")) return s;
  return emit(out, [&] { return kanspell::render(kanspell::to_roman(kannada)); });
}

ks_status ks_to_kannada(const char* roman, char** out) {
  if (ks_status s = need(roman, "null text")) return s;
  return emit(out,
              [&] { return kanspell::to_kannada(kanspell::tokenize(roman)); });
}

void ks_string_free(char* s) { std::free(s); }

}  // extern "C"
