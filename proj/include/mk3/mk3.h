#ifndef MK3_H
#define MK3_H

/*
 * C API for the MK3 surface toolkit: exact local-global analysis of the three
 * Markoff-type K3 families
 *
 *   F1: x^2+y^2+z^2 - 4x^2y^2z^2 = k
 *   F2: x^2+y^2+z^2 - 4(x^2y^2+y^2z^2+z^2x^2) + 16x^2y^2z^2 = k
 *   F3: x^2+y^2+z^2 + 4(x^2y^2+y^2z^2+z^2x^2) - 16x^2y^2z^2 = k
 *
 * All computations are exact. Results are returned as opaque report handles
 * whose contents are available as deterministic JSON (schema-stable across
 * runs) and as human-readable text. Rational arguments are passed as strings
 * ("a" or "a/b"). Every function returns a status code; mk3_last_error()
 * describes the most recent failure on the calling thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#define MK3_API __declspec(dllexport)
#else
#define MK3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mk3_status {
    MK3_OK = 0,
    MK3_EINVAL = 1,        /* bad arguments / precondition violated */
    MK3_EPRECISION = 2,    /* p-adic precision insufficient */
    MK3_ESINGULAR = 3,     /* singular point / singular reduction */
    MK3_ENOTCERT = 4,      /* Newton condition not satisfied */
    MK3_ETOOLARGE = 5,     /* factorization or scan beyond configured bounds */
    MK3_EINTERNAL = 6
} mk3_status;

typedef struct mk3_surface mk3_surface; /* opaque: one family member W_k */
typedef struct mk3_report mk3_report;   /* opaque: JSON-backed result */

MK3_API const char* mk3_status_name(mk3_status s);
MK3_API const char* mk3_last_error(void); /* thread-local detail for the last failure */
MK3_API const char* mk3_version(void);

/* ---- surfaces -------------------------------------------------------- */

/* family is 1, 2 or 3 */
MK3_API mk3_status mk3_surface_new(int family, long long k, mk3_surface** out);
MK3_API void mk3_surface_free(mk3_surface* s);

/* exact evaluation; coordinates and result are rational strings (caller frees
 * the result with mk3_string_free) */
MK3_API mk3_status mk3_surface_eval(const mk3_surface* s, const char* x, const char* y, const char* z,
                                    char** out_value);
MK3_API void mk3_string_free(char* s);

/* ---- Hilbert symbols -------------------------------------------------- */

/* place: "real" or a prime written in decimal; *out_halves is 0 or 1 (1 = 1/2) */
MK3_API mk3_status mk3_hilbert_symbol(const char* a, const char* b, const char* place, int* out_halves);
MK3_API mk3_status mk3_product_formula_check(const char* a, const char* b, int* out_ok);

/* ---- reports ----------------------------------------------------------- */

MK3_API const char* mk3_report_json(const mk3_report* r); /* owned by the report */
MK3_API const char* mk3_report_text(const mk3_report* r);
/* 0 = computed verdict (including "no obstruction"), 2 = inconclusive */
MK3_API int mk3_report_exit_code(const mk3_report* r);
MK3_API void mk3_report_free(mk3_report* r);

/* ---- searches ----------------------------------------------------------- */

MK3_API mk3_status mk3_search_integral(const mk3_surface* s, long long box, mk3_report** out);
MK3_API mk3_status mk3_search_rational(const mk3_surface* s, long long height, mk3_report** out);

/* ---- local solvability --------------------------------------------------- */

/* profile may be NULL (per-prime-only mode) or one of: assumption1, assumption2,
 * assumption3, thm44, thm45, thm46, prop51, prop52 */
MK3_API mk3_status mk3_solvable(const mk3_surface* s, long long prime_bound, const char* profile,
                                mk3_report** out);

/* pass/fail of a parameter against a profile; value is ell for the ell-derived
 * profiles (thm44/45/46, prop51/52) and k otherwise */
MK3_API mk3_status mk3_assumption_check(const char* profile, long long value, int* out_pass,
                                        char** out_first_violation);

/* ---- Brauer-Manin ---------------------------------------------------------- */

/* ell-driven obstruction run; profile NULL selects the family default
 * (f1 -> thm44, f2 -> thm45, f3 -> thm46) */
MK3_API mk3_status mk3_obstruction(int family, long long ell, const char* profile, long long prime_bound,
                                   int depth, mk3_report** out);
/* k-driven variant with the family's default classes */
MK3_API mk3_status mk3_obstruction_k(int family, long long k, long long prime_bound, int depth,
                                     mk3_report** out);

MK3_API mk3_status mk3_sa_failure(const mk3_surface* s, mk3_report** out);
MK3_API mk3_status mk3_rational_bm(int family, long long ell, const char* profile, mk3_report** out);

/* ---- Picard lattice ---------------------------------------------------------- */

MK3_API mk3_status mk3_picard_verify(mk3_report** out);
/* name: "gram", "alt_gram", "sigma", "tau", "rho"; plain text rows of integers */
MK3_API mk3_status mk3_picard_matrix(const char* name, char** out_text);

/* ---- Frobenius point counts ---------------------------------------------------- */

MK3_API mk3_status mk3_frobenius(long long p, long long kmod, int max_n, mk3_report** out);

/* ---- census ----------------------------------------------------------------- */

MK3_API mk3_status mk3_census_admissible(const char* profile, long long M, int prime_ell,
                                         mk3_report** out);
/* csv_path may be NULL to skip the CSV artifact */
MK3_API mk3_status mk3_census_hasse(int family, long long M, long long prime_bound, int depth,
                                    int prime_ell, const char* csv_path, mk3_report** out);

#ifdef __cplusplus
}
#endif

#endif /* MK3_H */
