/* grassfold — foldable seeds of Grassmannian cluster algebras and their
 * D=3 dual-conformal constraint verification.
 *
 * C API over the C++ core: opaque handles, integer status codes, JSON
 * payloads in heap strings released with gf_string_free().
 */
#ifndef GRASSFOLD_H
#define GRASSFOLD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gf_seed gf_seed_t;

typedef enum gf_status {
    GF_OK = 0,
    GF_ERROR_INVALID_ARGUMENT = 1,
    GF_ERROR_INVALID_MUTATION = 2,
    GF_ERROR_INCOMPARABLE = 3,
    GF_ERROR_NOT_A_FACTOR = 4,
    GF_ERROR_EVALUATION = 5,
    GF_ERROR_STRUCTURE = 6,
    GF_ERROR_SAMPLING = 7,
    GF_ERROR_PARSE = 8,
    GF_ERROR_IO = 9,
    GF_ERROR_INTERNAL = 10
} gf_status;

typedef enum gf_schedule_variant {
    GF_SCHEDULE_UNIFORM = 0,
    GF_SCHEDULE_LITERAL = 1
} gf_schedule_variant;

const char* gf_version(void);
const char* gf_status_name(int status);

/* Message of the most recent error on this thread; empty string if none. */
const char* gf_last_error(void);

void gf_string_free(char* s);
void gf_seed_free(gf_seed_t* seed);

/* ---- seed construction and mutation ---- */

int gf_seed_initial(int k, int n, gf_seed_t** out);
int gf_seed_foldable(int k, int n, int variant, gf_seed_t** out);
int gf_seed_from_json(const char* json, gf_seed_t** out);
int gf_seed_clone(const gf_seed_t* seed, gf_seed_t** out);

int gf_seed_k(const gf_seed_t* seed);
int gf_seed_n(const gf_seed_t* seed);

/* Column-major mutable id of grid position (row, col); frozen vertices are
 * numbered after the mutable block. */
int gf_seed_vertex_id(const gf_seed_t* seed, int row, int col, int* out_id);

int gf_seed_to_json(const gf_seed_t* seed, char** out_json);
int gf_seed_to_dot(const gf_seed_t* seed, char** out_dot);

/* Mutates in place; *out_record_json (optional) receives the exchange. */
int gf_seed_mutate(gf_seed_t* seed, int vertex_id, char** out_record_json);
int gf_seed_apply_sequence(gf_seed_t* seed, const int* ids, size_t count,
                           char** out_trace_json);

/* ---- folding ---- */

int gf_fold_schedule(int k, int n, int variant, char** out_json);

/* {"schedule": {...}, "seed": {...}, "equations": [...]} — for k = 4 the
 * equations are the X-coordinate identification output. */
int gf_fold(int k, int n, int variant, char** out_json);

/* ---- verification reports (JSON; "pass" field carries the verdict) ---- */

int gf_verify_seed(int k, int n, char** out_json);
int gf_verify_exchange(int k, int n, int variant, int trials, uint64_t rng_seed,
                       char** out_json);
int gf_verify_kinematics(int n, int dim, int trials, double tol, uint64_t rng_seed,
                         char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GRASSFOLD_H */
