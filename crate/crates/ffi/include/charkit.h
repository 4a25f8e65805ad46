#ifndef CHARKIT_H
#define CHARKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. The first five match the command-line exit codes.
typedef enum CharkitStatus {
  CHARKIT_STATUS_OK = 0,
  CHARKIT_STATUS_FAILURE = 1,
  CHARKIT_STATUS_PARSE = 2,
  CHARKIT_STATUS_HYPOTHESIS = 3,
  CHARKIT_STATUS_RESOURCE = 4,
  CHARKIT_STATUS_NULL_POINTER = 5,
  CHARKIT_STATUS_INVALID_UTF8 = 6,
  CHARKIT_STATUS_PANIC = 7,
} CharkitStatus;

// Opaque handle to an evaluated script.
typedef struct CharkitSession CharkitSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses and evaluates `script`; on success stores a new handle in `*out`.
//
// # Safety
// `script` must be a NUL-terminated string and `out` a valid pointer.
enum CharkitStatus charkit_session_new(const char *script, struct CharkitSession **out);

// Releases a handle from [`charkit_session_new`]. Null is ignored.
//
// # Safety
// `session` must come from [`charkit_session_new`] and not be used afterwards.
void charkit_session_free(struct CharkitSession *session);

// Runs a command line such as `"ehk --ideal M --emax 2 --format json"`
// (whitespace separated, no script path) against the session. The report
// is stored in `*out` even when the status is `RESOURCE` and a partial
// table exists; free it with [`charkit_string_free`].
//
// # Safety
// `session` must be a live handle, `command` a NUL-terminated string and
// `out` a valid pointer.
enum CharkitStatus charkit_session_run(const struct CharkitSession *session,
                                       const char *command,
                                       char **out);

// Message for the last failure on this thread, or null. The pointer stays
// valid until the next call into this library on the same thread.
const char *charkit_last_error(void);

// Frees a string returned through an `out` parameter. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void charkit_string_free(char *s);

// Library version as a static NUL-terminated string.
const char *charkit_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARKIT_H */
