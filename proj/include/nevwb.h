/* C interface to the value-distribution workbench.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a status code; on failure nevwb_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * allocated by the library and released with nevwb_string_free.
 */
#ifndef NEVWB_H
#define NEVWB_H

#include <stddef.h>

#if defined(_WIN32)
#define NEVWB_API __declspec(dllexport)
#else
#define NEVWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nevwb_status {
    NEVWB_OK = 0,
    NEVWB_E_INVALID_INPUT = 1,
    NEVWB_E_PARSE = 2,
    NEVWB_E_COPRIMALITY = 3,
    NEVWB_E_INTERNAL_CONTRADICTION = 4,
    NEVWB_E_NON_CONVERGENCE = 5,
    NEVWB_E_NUMERIC_DOMAIN = 6,
    NEVWB_E_NON_PROPER_INTERSECTION = 7,
    NEVWB_E_IO = 8,
    NEVWB_E_NULL_ARGUMENT = 9,
    NEVWB_E_UNKNOWN = 10
} nevwb_status;

typedef enum nevwb_verdict {
    NEVWB_HOLDS_ON_GRID = 0,
    NEVWB_VIOLATED_AT = 1,
    NEVWB_EXCLUDED_BY_W = 2,
    NEVWB_DEGENERATE_BRANCH = 3,
    NEVWB_HYPOTHESIS_FAILED = 4
} nevwb_verdict;

typedef struct nevwb_poly nevwb_poly;
typedef struct nevwb_mero nevwb_mero;
typedef struct nevwb_morphism nevwb_morphism;
typedef struct nevwb_scenario nevwb_scenario;
typedef struct nevwb_report nevwb_report;

NEVWB_API const char* nevwb_version(void);
NEVWB_API const char* nevwb_status_name(nevwb_status s);
NEVWB_API const char* nevwb_last_error(void);
NEVWB_API void nevwb_string_free(char* s);

/* Polynomials over Q(i). names may be NULL (x0, x1, ...); for one variable the default name is z. */
NEVWB_API nevwb_status nevwb_poly_parse(const char* text, size_t nvars, const char* const* names, nevwb_poly** out);
NEVWB_API nevwb_status nevwb_poly_from_json(const char* doc, nevwb_poly** out);
NEVWB_API nevwb_status nevwb_poly_to_string(const nevwb_poly* p, char** out);
NEVWB_API nevwb_status nevwb_poly_to_json(const nevwb_poly* p, char** out);
NEVWB_API void nevwb_poly_free(nevwb_poly* p);

/* Meromorphic functions scalar * prod p_k^m_k * exp(Q) from a JSON document
 * ("z^2 + 1", {"h": ..., "ell": k}, {"unit": Q} or {"scalar", "factors", "exp"}). */
NEVWB_API nevwb_status nevwb_mero_from_json(const char* doc, nevwb_mero** out);
NEVWB_API nevwb_status nevwb_mero_to_json(const nevwb_mero* f, char** out);
NEVWB_API void nevwb_mero_free(nevwb_mero* f);

/* functional: "T", "N" (zeros), "N1" (zeros, truncated at 1), "Npole", "m" (proximity to infinity)
 * or "Ngcd" (needs other). */
NEVWB_API nevwb_status nevwb_nev_value(const nevwb_mero* f, const char* functional, const nevwb_mero* other, double r,
                                       double* value);
/* Evaluates a functional on a log-spaced grid. fn_doc is a function document or, for "T", an array
 * of function documents (a curve). Output: {"functional", "rows": [{"r", "value"}]}. */
NEVWB_API nevwb_status nevwb_nev_grid(const char* fn_doc, const char* functional, const char* other_doc, double r_min,
                                      double r_max, size_t count, char** out_json);

/* Exceptional set W for a plane curve G (3 variables). curve_doc may be NULL; otherwise an array
 * of three function documents tested for membership. */
NEVWB_API nevwb_status nevwb_exceptional_set(const nevwb_poly* G, int ell2, const char* curve_doc, char** out_json);

/* Effective constants. eps and c3 are rationals "p/q"; family_doc and c3 may be NULL. */
NEVWB_API nevwb_status nevwb_constants(long n, long d, const char* eps, const char* family_doc, const char* c3,
                                       char** out_json);

NEVWB_API nevwb_status nevwb_morphism_make(const nevwb_poly* f1, const nevwb_poly* f2, const nevwb_poly* f3,
                                           int check_finite, nevwb_morphism** out);
/* op: "describe", "jacobian", "jacobian-full", "euler", "pushforward" (needs Z) */
NEVWB_API nevwb_status nevwb_morphism_op(const nevwb_morphism* m, const char* op, const nevwb_poly* Z, char** out_json);
NEVWB_API void nevwb_morphism_free(nevwb_morphism* m);
NEVWB_API nevwb_status nevwb_general_position(const nevwb_poly* const* curves, size_t count, char** out_json);
NEVWB_API nevwb_status nevwb_transversality(const nevwb_poly* f1, const nevwb_poly* f2, char** out_json);

NEVWB_API nevwb_status nevwb_scenario_load(const char* path, nevwb_scenario** out);
NEVWB_API nevwb_status nevwb_scenario_parse(const char* doc, nevwb_scenario** out);
/* Scalar overrides; pass NULL / non-positive values to keep the scenario's setting. */
NEVWB_API nevwb_status nevwb_scenario_override(nevwb_scenario* s, const char* eps, double r_min, double r_max,
                                               long count);
NEVWB_API void nevwb_scenario_free(nevwb_scenario* s);

NEVWB_API nevwb_status nevwb_run_scenario(const nevwb_scenario* s, nevwb_report** out);
NEVWB_API nevwb_verdict nevwb_report_verdict(const nevwb_report* r);
/* nonzero iff a gated violation outside W */
NEVWB_API int nevwb_report_failed(const nevwb_report* r);
NEVWB_API nevwb_status nevwb_report_json(const nevwb_report* r, char** out_json);
NEVWB_API nevwb_status nevwb_report_csv(const nevwb_report* r, char** out_csv);
NEVWB_API void nevwb_report_free(nevwb_report* r);

/* Runs every *.json scenario in dir. Output: {"entries": [...]}; *failures counts entries that
 * failed or did not meet their expectation. */
NEVWB_API nevwb_status nevwb_run_suite(const char* dir, char** out_json, int* failures);

#ifdef __cplusplus
}
#endif

#endif
