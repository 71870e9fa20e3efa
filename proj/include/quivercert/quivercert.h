#ifndef QUIVERCERT_QUIVERCERT_H
#define QUIVERCERT_QUIVERCERT_H

/*
 * C interface to the quivercert library.
 *
 * Every command produces a deterministic JSON report (identical inputs give
 * byte-identical output) and returns its verdict as a status code:
 *
 *   QVC_OK            computation succeeded / claim verified  (exit 0)
 *   QVC_NOT_VERIFIED  report produced, claim not verified     (exit 1)
 *   QVC_ERR_INPUT     unreadable or malformed input           (exit 2)
 *   QVC_ERR_INTERNAL  invariant violation inside the library  (exit 3)
 *
 * On QVC_OK and QVC_NOT_VERIFIED the report string is set; on errors it is
 * NULL and qvc_last_error() describes the problem. All returned strings are
 * heap-allocated and owned by the caller; release them with qvc_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qvc_status {
    QVC_OK = 0,
    QVC_NOT_VERIFIED = 1,
    QVC_ERR_INPUT = 2,
    QVC_ERR_INTERNAL = 3
} qvc_status;

typedef struct qvc_params {
    long long box_bound;       /* coefficient box half-width B, >= 1 */
    int modulus_cap;           /* largest modulus tried for residue proofs, >= 2 */
    unsigned long seed;        /* recorded in reports; used by property suites */
} qvc_params;

/* Fill in the documented defaults: B = 100, M = 16, seed = 0. */
void qvc_params_init(qvc_params* p);

/* Library version string, statically allocated. */
const char* qvc_version(void);

/* Description of the most recent failure on this thread, statically owned. */
const char* qvc_last_error(void);

/* Release a string returned through a char** out parameter. NULL is fine. */
void qvc_string_free(char* s);

/*
 * Session: a parsed quiver spec with its bound path algebra, for callers who
 * want introspection without running a full command.
 */
typedef struct qvc_session qvc_session;

qvc_status qvc_session_open(const char* quiver_path, qvc_session** out);
void qvc_session_close(qvc_session* s);
qvc_status qvc_session_quiver_name(const qvc_session* s, char** out);
qvc_status qvc_session_num_vertices(const qvc_session* s, long* out);
qvc_status qvc_session_algebra_dimension(const qvc_session* s, long* out);

/*
 * Commands. `params` may be NULL for defaults. `report_json` receives the
 * JSON report (newline-terminated) on QVC_OK / QVC_NOT_VERIFIED.
 */

/* Validate a quiver spec; report the algebra dimension and normal basis. */
qvc_status qvc_cmd_check(const char* quiver_path, const qvc_params* params, char** report_json);

/* Cartan matrix, Gram form of the simples, projective classes. */
qvc_status qvc_cmd_gram(const char* quiver_path, const qvc_params* params, char** report_json);

/* Ext table for two representation files over the same quiver spec. */
qvc_status qvc_cmd_ext(const char* m_rep_path, const char* n_rep_path, const qvc_params* params,
                       char** report_json);

/* Self Hom/Ext table of a representation and the exceptionality verdict. */
qvc_status qvc_cmd_exceptional(const char* quiver_path, const char* rep_path,
                               const qvc_params* params, char** report_json);

/*
 * Apply a braid word to a sequence of classes. The word is whitespace- or
 * comma-separated 1-based positions, negative for the inverse generator,
 * e.g. "1 2 -1". `classes` holds comma-separated coordinate strings like
 * "1,1,1"; pass num_classes = 0 for the default sequence (projective classes
 * in exceptional order).
 */
qvc_status qvc_cmd_mutate(const char* quiver_path, const char* braid_word, const char* const* classes,
                          size_t num_classes, const qvc_params* params, char** report_json);

/* Nonextendability certificate for the class "c1,c2,...,cn". */
qvc_status qvc_cmd_certify_nonext(const char* quiver_path, const char* class_spec,
                                  const qvc_params* params, char** report_json);

/*
 * Jordan-Hoelder violation report. `candidates` holds candidate classes as
 * coordinate strings; pass num_candidates = 0 to use the built-in candidates
 * of a known spec (or to get an extendability survey when there are none).
 */
qvc_status qvc_cmd_certify_jh(const char* quiver_path, const char* const* candidates,
                              size_t num_candidates, const qvc_params* params, char** report_json);

/* Replay the certificates of a previously emitted JSON report file. */
qvc_status qvc_cmd_verify(const char* report_path, const qvc_params* params, char** report_json);

/* Render a JSON report as the human-readable text format. */
qvc_status qvc_render_text(const char* report_json, char** text_out);

#ifdef __cplusplus
}
#endif

#endif
