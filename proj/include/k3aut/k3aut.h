/*
 * C interface to the k3aut library: automorphism groups of K3 surfaces with
 * Picard lattice of rank 2, Pell equations and lattice isometries.
 *
 * Integers cross the boundary as decimal strings. Results are JSON documents
 * held by opaque handles and copied out with k3aut_result_json. Functions
 * that write text take (out, out_len): if out is NULL or *out_len is too
 * small, *out_len is set to the required size (including the terminating
 * NUL) and K3AUT_ERROR_INSUFFICIENT_BUFFER is returned.
 *
 * All functions are thread-safe; handles may be shared read-only.
 */
#ifndef K3AUT_H
#define K3AUT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define K3AUT_API __declspec(dllexport)
#else
#define K3AUT_API __attribute__((visibility("default")))
#endif

enum k3aut_status {
    K3AUT_OK = 0,
    K3AUT_ERROR_INVALID_ARGUMENT = -1,
    K3AUT_ERROR_SQUARE_INPUT = -2,
    K3AUT_ERROR_ONLY_TRIVIAL = -3,
    K3AUT_ERROR_MISMATCHED_D = -4,
    K3AUT_ERROR_ZERO_M = -5,
    K3AUT_ERROR_DEGENERATE = -6,
    K3AUT_ERROR_NOT_ISOMETRY = -7,
    K3AUT_ERROR_ZERO_K = -8,
    K3AUT_ERROR_SQUARE_DISCRIMINANT = -9,
    K3AUT_ERROR_ZERO_CLASS = -10,
    K3AUT_ERROR_NOT_HYPERBOLIC = -11,
    K3AUT_ERROR_NO_HYPERBOLIC_ISOMETRY = -12,
    K3AUT_ERROR_NOT_REALIZABLE = -13,
    K3AUT_ERROR_INTERNAL = -14,
    K3AUT_ERROR_NULL_POINTER = -20,
    K3AUT_ERROR_INSUFFICIENT_BUFFER = -21,
    K3AUT_ERROR_BAD_HANDLE = -22,
    K3AUT_ERROR_OUT_OF_MEMORY = -23
};

enum k3aut_variant {
    K3AUT_VARIANT_NONE = 0,
    K3AUT_VARIANT_FINITE = 1,
    K3AUT_VARIANT_CYCLIC = 2,
    K3AUT_VARIANT_DIHEDRAL = 3,
    K3AUT_VARIANT_DEGENERATE = 4
};

typedef struct k3aut_lattice_struct* k3aut_lattice_t;
typedef struct k3aut_result_struct* k3aut_result_t;

K3AUT_API const char* k3aut_version(void);

/* Stable lowercase name of a status code, e.g. "degenerate". */
K3AUT_API const char* k3aut_status_name(int status);

/* 1 when the status is a rejection of the mathematical input, else 0. */
K3AUT_API int k3aut_status_is_domain_error(int status);

/* Message of the last failure on the calling thread. */
K3AUT_API int k3aut_last_error(char* out, size_t* out_len);

/* The even lattice with Gram matrix ((2a, b), (b, 2c)); b^2 - 4ac must be positive. */
K3AUT_API int k3aut_lattice_create(k3aut_lattice_t* lattice, const char* a, const char* b, const char* c);
K3AUT_API int k3aut_lattice_destroy(k3aut_lattice_t lattice);
K3AUT_API int k3aut_lattice_discriminant(k3aut_lattice_t lattice, char* out, size_t* out_len);

/*
 * Operations producing a result. On success *result holds the JSON document;
 * on failure it holds {"error": {"code", "message"}} (a full record for
 * classify, quartic and batch) and the status is returned. The caller
 * destroys *result in both cases.
 */
K3AUT_API int k3aut_classify(k3aut_lattice_t lattice, int digits, k3aut_result_t* result);
K3AUT_API int k3aut_quartic(const char* degree, const char* genus, int digits, k3aut_result_t* result);
/* all_below may be NULL. */
K3AUT_API int k3aut_pell(const char* d, const char* m, const char* all_below, k3aut_result_t* result);
K3AUT_API int k3aut_represent(k3aut_lattice_t lattice, const char* k, k3aut_result_t* result);
K3AUT_API int k3aut_orbit(k3aut_lattice_t lattice, const char* x0, const char* y0, long steps, int digits,
                          k3aut_result_t* result);
/* matrix is "alpha,beta,gamma,delta" in the input basis, or NULL for the automorphisms. */
K3AUT_API int k3aut_entropy(k3aut_lattice_t lattice, const char* matrix, int digits, k3aut_result_t* result);
/* One JSONL request line ({"a","b","c"} or {"deg","genus"}); always yields a record. */
K3AUT_API int k3aut_batch_line(const char* line, int digits, k3aut_result_t* result);

K3AUT_API int k3aut_result_json(k3aut_result_t result, char* out, size_t* out_len);
K3AUT_API int k3aut_result_status(k3aut_result_t result, int* status);
K3AUT_API int k3aut_result_variant(k3aut_result_t result, int* variant);
K3AUT_API int k3aut_result_destroy(k3aut_result_t result);

#ifdef __cplusplus
}
#endif

#endif
