#ifndef BRIMKIT_H
#define BRIMKIT_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define BRIM_ABI_VERSION 1

typedef enum BrimStatus {
  BRIM_STATUS_OK = 0,
  BRIM_STATUS_IDENTITY_FAILURE = 1,
  BRIM_STATUS_INPUT_ERROR = 2,
  BRIM_STATUS_NULL_POINTER = 3,
  BRIM_STATUS_INVALID_UTF8 = 4,
  BRIM_STATUS_COMPUTATION_ERROR = 5,
} BrimStatus;

/**
 * Opaque session handle.
 */
typedef struct BrimSession BrimSession;

/**
 * Optional flags for [`brim_run_command`]. Fields guarded by a `has_*`
 * flag are ignored when the flag is false.
 */
typedef struct BrimArgs {
  bool has_nu;
  int64_t nu;
  bool has_j;
  uint32_t j;
  bool has_range;
  int64_t range_lo;
  int64_t range_hi;
  bool oracle;
} BrimArgs;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t brim_abi_version(void);

/**
 * Parses a session file's contents into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BrimStatus brim_session_parse(const char *text, struct BrimSession **out);

/**
 * # Safety
 * `session` must come from [`brim_session_parse`] and not be freed yet.
 * Null is accepted and ignored.
 */
void brim_session_free(struct BrimSession *session);

/**
 * Buchsbaum-Rim multiplicity and whether Φ is a parameter matrix.
 *
 * # Safety
 * All pointers must be valid; `session` must be a live handle.
 */
enum BrimStatus brim_br(const struct BrimSession *session, int64_t *out_br, bool *out_is_parameter);

/**
 * Euler characteristic of the complex at degree `nu`.
 *
 * # Safety
 * All pointers must be valid; `session` must be a live handle.
 */
enum BrimStatus brim_chi(const struct BrimSession *session, int64_t nu, int64_t *out);

/**
 * Runs a CLI command and hands back its JSON report, also on failure.
 * The status mirrors the CLI exit code.
 *
 * # Safety
 * `session` must be a live handle, `command` a NUL-terminated string,
 * `args` null or valid, and `out_json` a valid pointer. Free the returned
 * string with [`brim_string_free`].
 */
enum BrimStatus brim_run_command(const struct BrimSession *session,
                                 const char *command,
                                 const struct BrimArgs *args,
                                 char **out_json);

/**
 * # Safety
 * `s` must come from this library and not be freed yet. Null is ignored.
 */
void brim_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library from the same thread.
 */
const char *brim_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRIMKIT_H */
