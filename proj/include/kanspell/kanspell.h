/* Copyright 2026 The Kanspell Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the Kannada spell checker, sandhi splitter and root
 * extractor.
 *
 * Words may be given in Kannada script or in the roman scheme. Results are
 * UTF-8 JSON documents returned through `char** out`; release them with
 * ks_string_free(). On failure nothing is written to `out` and
 * ks_last_error() describes the failure of the calling thread's last call.
 *
 * An engine may be shared between threads. Lookups run concurrently;
 * ks_record_choice() and ks_add_word() are serialized internally. */

#ifndef KANSPELL_KANSPELL_H_
#define KANSPELL_KANSPELL_H_

#include <stddef.h>

#if defined(_WIN32)
#define KS_API __declspec(dllexport)
#else
#define KS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ks_engine ks_engine;

typedef enum ks_status {
  KS_OK = 0,
  KS_INVALID_ARGUMENT = 1,
  KS_INVALID_ROMAN_INPUT = 2,
  KS_UNMAPPABLE_CODEPOINT = 3,
  KS_EMPTY_LEXICON = 4,
  KS_RULE_NOT_APPLICABLE = 5,
  KS_STORAGE_ERROR = 6,
  KS_IO_ERROR = 7,
  KS_INTERNAL_ERROR = 8,
} ks_status;

typedef struct ks_config {
  const char* lexicon_path;       /* required */
  const char* markers_path;       /* required */
  const char* memory_path;        /* NULL or "": choices not persisted */
  const char* user_lexicon_path;  /* NULL or "": added words not persisted */
  int accept_roman;               /* corpus mode: nonzero accepts roman runs */
} ks_config;

KS_API const char* ks_status_name(ks_status status);
/* Message for the calling thread's last failed call; "" when none. */
KS_API const char* ks_last_error(void);

KS_API ks_status ks_engine_open(const ks_config* config, ks_engine** out);
KS_API void ks_engine_close(ks_engine* engine);

/* {"input","script","word","verdict"[,"split"|"analysis"|"suggestions"]} */
KS_API ks_status ks_check(ks_engine* engine, const char* word, char** out);
/* {"input","script","word","splits":[...]}; primary split first. */
KS_API ks_status ks_split(ks_engine* engine, const char* word, char** out);
/* {"prefix","suffix","results":[{"word","rule"}]}. `rule` NULL or "" joins
 * with every applicable rule. */
KS_API ks_status ks_join(ks_engine* engine, const char* prefix,
                         const char* suffix, const char* rule, char** out);
/* {"input","script","word","root","stripped":[...],"via"}. */
KS_API ks_status ks_root(ks_engine* engine, const char* word, char** out);
/* {"input","script","word","suggestions":[...]}; empty for valid words. */
KS_API ks_status ks_suggest(ks_engine* engine, const char* word, char** out);
/* {"tokens":[...],"counts":{...},"total"}. */
KS_API ks_status ks_corpus(ks_engine* engine, const char* text, char** out);
/* {"word_count","user_word_count","forward_states","reverse_states",
 *  "trie_states","trie_to_automaton_ratio"} */
KS_API ks_status ks_stats(ks_engine* engine, char** out);

/* Remembers `chosen` for `misspelt`; persisted before returning. */
KS_API ks_status ks_record_choice(ks_engine* engine, const char* misspelt,
                                  const char* chosen);
/* *added (optional) is set to 1 when the word was new. */
KS_API ks_status ks_add_word(ks_engine* engine, const char* word, int* added);

/* Tab-separated rule table (not JSON). */
KS_API ks_status ks_rules_tsv(char** out);
/* Plain strings, not JSON. */
KS_API ks_status ks_to_roman(const char* kannada, char** out);
KS_API ks_status ks_to_kannada(const char* roman, char** out);

KS_API void ks_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  /* KANSPELL_KANSPELL_H_ */
