/* C interface for the sahar sexagesimal toolkit. */

#ifndef SAHAR_H
#define SAHAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// How `sahar_rational_format` renders a numeral.
typedef enum SaharFormatMode {
  SAHAR_FORMAT_MODE_ABSOLUTE = 0,
  SAHAR_FORMAT_MODE_FLOATING = 1,
} SaharFormatMode;

// Replay outcome written by the `sahar_replay_*` calls.
typedef enum SaharReplayStatus {
  SAHAR_REPLAY_STATUS_ALL_OK = 0,
  SAHAR_REPLAY_STATUS_ANNOTATED_ERRORS_ONLY = 1,
  SAHAR_REPLAY_STATUS_MISMATCH_FOUND = 2,
} SaharReplayStatus;

// Result of every fallible FFI call.
typedef enum SaharStatus {
  SAHAR_STATUS_OK = 0,
  SAHAR_STATUS_NULL_POINTER = 1,
  SAHAR_STATUS_INVALID_UTF8 = 2,
  SAHAR_STATUS_PARSE_ERROR = 3,
  SAHAR_STATUS_DOMAIN_ERROR = 4,
  SAHAR_STATUS_JSON_ERROR = 5,
  SAHAR_STATUS_INTERNAL_ERROR = 6,
} SaharStatus;

// An exact rational number (opaque).
typedef struct SaharRational SaharRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent failure on this thread. Borrowed;
// valid until the next library call from the same thread.
const char *sahar_last_error(void);

// Parses a sexagesimal numeral ("1,12;15") or decimal fraction
// ("289/4") into a new rational handle.
enum SaharStatus sahar_rational_parse(const char *text, struct SaharRational **out);

// Builds num/den. `den` must be nonzero.
enum SaharStatus sahar_rational_from_ratio(int64_t num, int64_t den, struct SaharRational **out);

// Releases a rational handle. NULL is ignored.
void sahar_rational_free(struct SaharRational *handle);

// Renders a numeral with at most `max_places` fraction places; a
// truncated expansion ends in U+2026.
enum SaharStatus sahar_rational_format(const struct SaharRational *handle,
                                       enum SaharFormatMode mode,
                                       size_t max_places,
                                       char **out);

// Renders the reduced decimal fraction, e.g. "289/4".
enum SaharStatus sahar_rational_decimal(const struct SaharRational *handle, char **out);

// Nearest double, for plotting and quick checks.
enum SaharStatus sahar_rational_to_double(const struct SaharRational *handle, double *out);

// out = a + b
enum SaharStatus sahar_rational_add(const struct SaharRational *a,
                                    const struct SaharRational *b,
                                    struct SaharRational **out);

// out = a - b
enum SaharStatus sahar_rational_sub(const struct SaharRational *a,
                                    const struct SaharRational *b,
                                    struct SaharRational **out);

// out = a * b
enum SaharStatus sahar_rational_mul(const struct SaharRational *a,
                                    const struct SaharRational *b,
                                    struct SaharRational **out);

// out = a / b; fails on b = 0.
enum SaharStatus sahar_rational_div(const struct SaharRational *a,
                                    const struct SaharRational *b,
                                    struct SaharRational **out);

// out = 1/q; fails on q = 0.
enum SaharStatus sahar_rational_reciprocal(const struct SaharRational *handle,
                                           struct SaharRational **out);

// Writes 1 when n is regular (reciprocal terminates in base 60),
// 0 otherwise. Fails on n = 0.
enum SaharStatus sahar_is_regular(uint64_t n, int32_t *out);

// Evaluates a solid descriptor (the JSON shape used by `sahar volume
// spec`) and returns a JSON object `{kind, volume, display}` with the
// volume in cubic nindan.
enum SaharStatus sahar_volume_from_json(const char *descriptor, uint32_t digits, char **out);

// Replays a bundled script by name ("SMT14-P1", "SMT14-P2",
// "BM85194-R41"), returning the trace JSON and the replay verdict.
enum SaharStatus sahar_replay_bundled(const char *name,
                                      char **out_trace,
                                      enum SaharReplayStatus *out_status);

// Parses and replays script source text.
enum SaharStatus sahar_replay_source(const char *source,
                                     char **out_trace,
                                     enum SaharReplayStatus *out_status);

// JSON catalog of the bundled scripts:
// `[{name, tablet, lines, summary}, ...]`.
enum SaharStatus sahar_bundled_scripts(char **out);

// Releases a string returned by this library. NULL is ignored.
void sahar_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SAHAR_H */
