#ifndef MINSEQ_H
#define MINSEQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum MinseqStatus {
  MINSEQ_STATUS_OK = 0,
  // A required pointer was null or a string was not UTF-8.
  MINSEQ_STATUS_INVALID_ARGUMENT = 1,
  MINSEQ_STATUS_PARSE_ERROR = 2,
  // The sequent is not classically valid.
  MINSEQ_STATUS_NOT_VALID = 3,
  // The sequent is valid but not minimal.
  MINSEQ_STATUS_NOT_MINIMAL = 4,
  // The derivation uses a rule the target system cannot simulate.
  MINSEQ_STATUS_NOT_CONTAINED = 5,
  // A library invariant was violated; the call had no effect.
  MINSEQ_STATUS_INTERNAL = 6,
} MinseqStatus;

// Verdict of [`minseq_search`].
typedef enum MinseqVerdict {
  MINSEQ_VERDICT_DERIVABLE = 0,
  MINSEQ_VERDICT_UNDERIVABLE_DEFINITIVE = 1,
  MINSEQ_VERDICT_UNDERIVABLE_WITHIN_CAPS = 2,
  MINSEQ_VERDICT_EXHAUSTED = 3,
} MinseqVerdict;

// Opaque derivation handle.
typedef struct MinseqDerivation MinseqDerivation;

// Opaque sequent handle.
typedef struct MinseqSequent MinseqSequent;

// Opaque system handle.
typedef struct MinseqSystem MinseqSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after success.
// Valid until the next call into this library on the same thread.
const char *minseq_last_error_message(void);

// Library version as a static string.
const char *minseq_version(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void minseq_string_free(char *s);

// Parses a sequent such as `"P & Q, ~P"`.
//
// # Safety
// `input` must be a nul-terminated string; `out` must be writable.
enum MinseqStatus minseq_sequent_parse(const char *input, struct MinseqSequent **out);

// Renders a sequent in canonical syntax.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_sequent_render(const struct MinseqSequent *s, char **out);

// # Safety
// `s` must be null or a live handle, not used afterwards.
void minseq_sequent_free(struct MinseqSequent *s);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_sequent_is_valid(const struct MinseqSequent *s, bool *out);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_sequent_is_minimal(const struct MinseqSequent *s, bool *out);

// A minimal subsequent of a valid sequent.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_sequent_minimize(const struct MinseqSequent *s,
                                          struct MinseqSequent **out);

// Parses a system: a preset name (`mp`, `gs1p`, ...) or a comma list of rules.
//
// # Safety
// `input` must be a nul-terminated string; `out` must be writable.
enum MinseqStatus minseq_system_parse(const char *input, struct MinseqSystem **out);

// # Safety
// `s` must be null or a live handle, not used afterwards.
void minseq_system_free(struct MinseqSystem *s);

// Whether `outer` contains `inner` (every rule of `inner` is derived in `outer`).
//
// # Safety
// Both handles must be live; `out` must be writable.
enum MinseqStatus minseq_system_contains(const struct MinseqSystem *outer,
                                         const struct MinseqSystem *inner,
                                         bool *out);

// Builds the minimal-calculus derivation of a minimal sequent.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_prove(const struct MinseqSequent *s, struct MinseqDerivation **out);

// Parses the derivation format, e.g. `"(par [P | ~P] (ax [P, ~P]))"`.
//
// # Safety
// `input` must be a nul-terminated string; `out` must be writable.
enum MinseqStatus minseq_derivation_parse(const char *input, struct MinseqDerivation **out);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum MinseqStatus minseq_derivation_render(const struct MinseqDerivation *d, char **out);

// # Safety
// `d` must be null or a live handle, not used afterwards.
void minseq_derivation_free(struct MinseqDerivation *d);

// Checks a derivation in a system. `ok` receives the verdict; when it is
// false the last error message lists the violations.
//
// # Safety
// Both handles must be live; `ok` must be writable.
enum MinseqStatus minseq_check(const struct MinseqSystem *sys,
                               const struct MinseqDerivation *d,
                               bool *ok);

// Rewrites a derivation into `target`.
//
// # Safety
// Both handles must be live; `out` must be writable.
enum MinseqStatus minseq_elaborate(const struct MinseqDerivation *d,
                                   const struct MinseqSystem *target,
                                   struct MinseqDerivation **out);

// Backward proof search. Zero caps select the defaults. When the verdict
// is `Derivable` and `proof` is non-null, it receives the derivation.
//
// # Safety
// Both handles must be live; `verdict` must be writable; `proof` may be null.
enum MinseqStatus minseq_search(const struct MinseqSystem *sys,
                                const struct MinseqSequent *s,
                                size_t max_width,
                                size_t max_depth,
                                enum MinseqVerdict *verdict,
                                struct MinseqDerivation **proof);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINSEQ_H */
