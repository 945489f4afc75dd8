/* qorth C API: exact verification engine for the quantum orthogonal group,
 * its quantum spheres and hyperboloids, line-bundle idempotents and the
 * dual Casimir action.
 *
 * Usage pattern: create an engine, set options, run suites, read the
 * report, destroy the engine. All returned strings are heap-allocated and
 * must be released with qorth_string_free. Functions return QORTH_OK on
 * success; on error qorth_last_error() describes the failure (thread
 * local). Engine handles are opaque and not thread-safe for concurrent
 * mutation; suite execution itself may use worker threads internally.
 */

#ifndef QORTH_H
#define QORTH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qorth_engine qorth_engine;

typedef enum qorth_status {
    QORTH_OK = 0,
    QORTH_E_INVALID = 1,  /* bad arguments (unknown suite, option, algebra) */
    QORTH_E_PARSE = 2,    /* expression syntax error */
    QORTH_E_FAILED = 3,   /* suites ran and at least one check failed */
    QORTH_E_INTERNAL = 4
} qorth_status;

const char* qorth_version(void);

/* thread-local message for the most recent failing call */
const char* qorth_last_error(void);

qorth_engine* qorth_engine_new(void);
void qorth_engine_free(qorth_engine* engine);

/* keys: "max-n", "max-j", "degree-bound", "jobs", "seed" */
qorth_status qorth_engine_set_int(qorth_engine* engine, const char* key, int64_t value);

size_t qorth_suite_count(void);
const char* qorth_suite_name(size_t index); /* NULL when out of range */

/* run one suite (or all) and append the results to the engine report */
qorth_status qorth_run_suite(qorth_engine* engine, const char* name);
qorth_status qorth_run_all(qorth_engine* engine);

/* report over everything run so far */
qorth_status qorth_report_json(const qorth_engine* engine, char** out);
qorth_status qorth_report_human(const qorth_engine* engine, char** out);
/* 0 when every executed check passed, 1 otherwise */
int qorth_report_exit_code(const qorth_engine* engine);
void qorth_report_clear(qorth_engine* engine);

/* canonical normal form of an expression; algebra is one of
 * "sl2", "c3", "ext", "uq", "so2" */
qorth_status qorth_reduce(const qorth_engine* engine, const char* algebra, const char* expression,
                          char** out);

/* R-matrix, projectors and induced relation sets as JSON (n = 2 or 3) */
qorth_status qorth_rmatrix_json(const qorth_engine* engine, int n, char** out);

void qorth_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QORTH_H */
