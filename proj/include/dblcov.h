/* dblcov: exact toolkit for double covers of projective space.
 *
 * C interface over the C++ core: opaque bundle handles, status codes, and
 * JSON strings as the data plane. Every function that produces a string
 * allocates it on the heap; release with dc_string_free. Status codes double
 * as CLI exit codes.
 */
#ifndef DBLCOV_H
#define DBLCOV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
    DC_OK = 0,
    DC_CHECK_FAILED = 1,          /* run completed, some pass/fail flag is false */
    DC_PARSE_ERROR = 2,
    DC_NOT_IN_IDEAL_SQUARE = 3,
    DC_DEGENERATE_DECOMPOSITION = 4,
    DC_ZERO_BRANCH = 5,
    DC_COMPONENT_DIVISOR = 6,
    DC_CAP_EXCEEDED = 7,
    DC_RETRY_EXCEEDED = 8,
    DC_BAD_PRIME = 9,
    DC_RING_MISMATCH = 10,
    DC_DEGREE_MISMATCH = 11,
    DC_DIMENSION_MISMATCH = 12,
    DC_BAD_ARGUMENT = 13,
    DC_UNKNOWN_NAME = 14,
    DC_INTERNAL_ERROR = 15
} dc_status;

const char* dc_version(void);
const char* dc_status_name(dc_status s);

/* Message of the most recent failure on the calling thread; empty string
 * when the last call succeeded. The pointer stays valid until the next
 * dblcov call on the same thread. */
const char* dc_last_error(void);

void dc_string_free(char* s);

/* An instance bundle: named polynomials with roles plus (n, d, k) metadata.
 * See the project README for the JSON schema. */
typedef struct dc_bundle dc_bundle;

dc_status dc_bundle_parse(const char* json_text, dc_bundle** out);
dc_status dc_bundle_canned(const char* name, dc_bundle** out);
/* params: {"n":int, "d":int, "k":int, "seed":u64, "field":"Q"|{"p":prime}} */
dc_status dc_bundle_random(const char* params_json, dc_bundle** out);
dc_status dc_bundle_to_json(const dc_bundle* b, char** out);
void dc_bundle_free(dc_bundle* b);

/* Pipelines. params_json may be NULL or "{}" for defaults. *out receives the
 * run report (JSON; census/hilbert emit CSV when params request
 * "format":"csv"). On failure *out carries a JSON error object when one is
 * available. */
dc_status dc_run_lift(const dc_bundle* input, const char* params_json, char** out);
dc_status dc_run_census(const char* params_json, char** out);
dc_status dc_run_roundtrip(const char* params_json, char** out);
dc_status dc_run_hilbert(const char* params_json, char** out);
dc_status dc_run_gen(const char* params_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DBLCOV_H */
