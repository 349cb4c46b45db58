/* C interface to the Dold-Puppe complex library.
 *
 * All functions return a dpc_status; results are written through out
 * parameters. Returned strings are heap-allocated and must be released
 * with dpc_free_string. On any failure dpc_last_error() gives a
 * message describing the problem (thread-local storage).
 */
#ifndef DPC_H
#define DPC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpc_status {
    DPC_OK = 0,
    DPC_ERR_ARGUMENT = 1,  /* bad pointer / out-of-range parameter */
    DPC_ERR_PARSE = 2,     /* malformed input text */
    DPC_ERR_VALIDATE = 3,  /* well-formed but invalid (e.g. d o d != 0) */
    DPC_ERR_LIMIT = 4,     /* refused: beyond configured size limits */
    DPC_ERR_INTERNAL = 5   /* internal consistency failure */
} dpc_status;

typedef struct dpc_complex dpc_complex;  /* bounded chain complex of free Z-modules */
typedef struct dpc_built dpc_built;      /* result of dpc_build */

const char* dpc_last_error(void);
void dpc_free_string(char* s);

/* Chain complexes. JSON schema:
 * {"ranks":[r0,...,rl], "differentials":[M1,...,Ml]} where Mk is the
 * matrix of d_k : C_k -> C_{k-1} as rows of integers (strings allowed
 * for entries beyond int64). */
dpc_status dpc_complex_parse(const char* json, dpc_complex** out);
dpc_status dpc_complex_read_file(const char* path, dpc_complex** out);
void dpc_complex_free(dpc_complex* c);
dpc_status dpc_complex_length(const dpc_complex* c, int* out);
dpc_status dpc_complex_rank(const dpc_complex* c, int degree, int64_t* out);
dpc_status dpc_complex_to_json(const dpc_complex* c, char** out);

/* The x / x* occurrence table for Sur([n],[k]), formatted as text. */
dpc_status dpc_table_text(int n, int k, char** out);

/* Gamma(C.)_n rank and the face/degeneracy operators. */
dpc_status dpc_gamma_rank(const dpc_complex* c, int n, int64_t* out);
/* is_face != 0: d_i (0 <= i <= n); else s_i (0 <= i <= n-1).
 * length: length of the coefficient complex the copies refer to. */
dpc_status dpc_gamma_formula(int length, int n, int i, int is_face, char** out);
dpc_status dpc_gamma_matrix(const dpc_complex* c, int n, int i, int is_face, char** out_json);

/* Honourable-family listings.
 * length <= 0 means no length pruning (start at {0..n-1}).
 * degree > 0 switches to the completed list (at most `degree` sets per
 * family, cardinality capped by `length`), one family per line.
 * Otherwise the full inductive list "T1 = ..." is printed; honourable
 * entries are marked. trace != 0 adds the underline marks. */
dpc_status dpc_honourable_text(int n, int length, int degree, int minimal_only, int trace,
                               char** out);

/* Dold-Puppe complex of `functor` ("sym:D", "ext:D" or "tensor:D")
 * applied to c. */
dpc_status dpc_build(const dpc_complex* c, const char* functor, dpc_built** out);
void dpc_built_free(dpc_built* b);
dpc_status dpc_built_summary(const dpc_built* b, char** out);
dpc_status dpc_built_to_json(const dpc_built* b, char** out);
/* Borrowed view of the underlying complex; valid while b lives. */
dpc_status dpc_built_complex(const dpc_built* b, const dpc_complex** out);

/* Rebuild via the direct quotient construction and compare ranks and
 * homology with dpc_build. DPC_OK means they agree; the report
 * describes both sides. */
dpc_status dpc_oracle_compare(const dpc_complex* c, const char* functor, char** report);

/* One line per degree: "H_0 = Z/2". mod_p = 0 computes integral
 * homology; a prime p reports dimensions over F_p. */
dpc_status dpc_homology_text(const dpc_complex* c, int64_t mod_p, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DPC_H */
