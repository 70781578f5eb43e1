#ifndef SORANI_FST_H
#define SORANI_FST_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of an FFI call.
 */
typedef enum SoraniStatus {
  SORANI_STATUS_OK = 0,
  SORANI_STATUS_NULL_POINTER = 1,
  SORANI_STATUS_INVALID_UTF8 = 2,
  SORANI_STATUS_LOAD_ERROR = 3,
  SORANI_STATUS_INVALID_ANALYSIS = 4,
  SORANI_STATUS_PANIC = 5,
} SoraniStatus;

/**
 * Compiled grammar handle. Immutable once created, so one handle may be
 * shared by several threads.
 */
typedef struct SoraniGrammar SoraniGrammar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the built-in grammar over the built-in seed lexicon.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum SoraniStatus sorani_grammar_new_default(struct SoraniGrammar **out);

/**
 * Builds a grammar from a `.kfst` file and a lexicon TSV. A null path
 * selects the built-in data for that part.
 *
 * # Safety
 * Non-null paths must be NUL-terminated strings; `out` must be valid for
 * one write.
 */
enum SoraniStatus sorani_grammar_from_files(const char *grammar_path,
                                            const char *lexicon_path,
                                            struct SoraniGrammar **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `grammar` is null or a handle from this library not yet freed.
 */
void sorani_grammar_free(struct SoraniGrammar *grammar);

/**
 * Analyses of a surface word, newline-joined, into `*out`. `count`, when
 * not null, receives the number of analyses.
 *
 * # Safety
 * `grammar` is a live handle, `word` a NUL-terminated string, `out` valid
 * for one write and `count` null or valid for one write.
 */
enum SoraniStatus sorani_analyze(const struct SoraniGrammar *grammar,
                                 const char *word,
                                 char **out,
                                 size_t *count);

/**
 * Surface forms of an analysis string such as
 * `xward<verb-transitive-past-stem><past-1s>`.
 *
 * # Safety
 * As for [`sorani_analyze`].
 */
enum SoraniStatus sorani_generate(const struct SoraniGrammar *grammar,
                                  const char *analysis,
                                  char **out,
                                  size_t *count);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void sorani_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *sorani_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SORANI_FST_H */
