#ifndef EDR_H
#define EDR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EDR_BUILDING)
#    define EDR_API __declspec(dllexport)
#  else
#    define EDR_API __declspec(dllimport)
#  endif
#else
#  define EDR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edr_ring {
  EDR_RING_INT = 0,
  EDR_RING_POLYQ = 1,
  EDR_RING_PULLBACK = 2
} edr_ring;

typedef enum edr_status {
  EDR_OK = 0,
  EDR_ERR_RING_MISMATCH,
  EDR_ERR_NOT_IN_RING,
  EDR_ERR_NON_INTEGRAL_CONSTANT,
  EDR_ERR_NOT_DIVISIBLE,
  EDR_ERR_DIVISOR_ZERO,
  EDR_ERR_NOT_COMAXIMAL,
  EDR_ERR_NOT_UNIMODULAR,
  EDR_ERR_NOT_UNIMODULAR_TRIPLE,
  EDR_ERR_PRECONDITION,
  EDR_ERR_NOT_SQUARE,
  EDR_ERR_SEARCH_EXHAUSTED,
  EDR_ERR_CAP_EXCEEDED,
  EDR_ERR_TRANSFORM_FAILED,
  EDR_ERR_PARSE,
  EDR_ERR_INVALID_ARGUMENT,
  EDR_ERR_INTERNAL
} edr_status;

typedef enum edr_arith_op {
  EDR_ADD = 0,
  EDR_SUB = 1,
  EDR_MUL = 2,
  EDR_NEG = 3
} edr_arith_op;

typedef struct edr_element edr_element;
typedef struct edr_matrix edr_matrix;
typedef struct edr_reduction edr_reduction;

/* Message of the last failed call on this thread; never NULL. */
EDR_API const char* edr_last_error(void);
EDR_API const char* edr_status_name(edr_status status);
/* Frees strings returned by this library. */
EDR_API void edr_string_free(char* s);

EDR_API edr_status edr_ring_from_name(const char* name, edr_ring* out);

/* Elements */
EDR_API edr_status edr_element_parse(edr_ring ring, const char* text, edr_element** out);
EDR_API void edr_element_free(edr_element* e);
EDR_API edr_ring edr_element_ring(const edr_element* e);
/* Canonical text form; release with edr_string_free. */
EDR_API char* edr_element_format(const edr_element* e);
EDR_API int edr_element_equal(const edr_element* a, const edr_element* b);
/* b is ignored (may be NULL) for EDR_NEG. */
EDR_API edr_status edr_element_arith(const edr_element* a, const edr_element* b,
                                     edr_arith_op op, edr_element** out);

/* d = alpha*f + beta*g generates (f, g). Any out pointer may be NULL. */
EDR_API edr_status edr_gcd(const edr_element* f, const edr_element* g, edr_element** d,
                           edr_element** alpha, edr_element** beta);
/* (p*a, p*b + q*c) = (1). */
EDR_API edr_status edr_kaplansky(const edr_element* a, const edr_element* b,
                                 const edr_element* c, edr_element** p, edr_element** q);

/* Matrices */
EDR_API edr_status edr_matrix_parse(edr_ring ring, const char* text, edr_matrix** out);
EDR_API void edr_matrix_free(edr_matrix* m);
EDR_API size_t edr_matrix_rows(const edr_matrix* m);
EDR_API size_t edr_matrix_cols(const edr_matrix* m);
EDR_API edr_status edr_matrix_get(const edr_matrix* m, size_t i, size_t j, edr_element** out);
EDR_API char* edr_matrix_format(const edr_matrix* m);

/* P*A*Q = D with d1 | d2 | ... ; cap bounds the reduction passes (0 = default). */
EDR_API edr_status edr_diagonal_reduce(const edr_matrix* a, size_t cap, edr_reduction** out);
EDR_API void edr_reduction_free(edr_reduction* r);
/* which is 'P', 'Q' or 'D'. The returned matrix is owned by the caller. */
EDR_API edr_status edr_reduction_matrix(const edr_reduction* r, char which, edr_matrix** out);
EDR_API size_t edr_reduction_passes(const edr_reduction* r);
/* 1 if every invariant re-checks against a, 0 otherwise. */
EDR_API int edr_reduction_verify(const edr_matrix* a, const edr_reduction* r);

/* Certificate documents. command is one of gcd, comax, kaplansky, hermite,
 * diag, crit, critdomain, asr1, transform, demo. ring is ignored for demo.
 * On EDR_OK *json holds the document (release with edr_string_free) and
 * *verified its verification flag. */
EDR_API edr_status edr_document(const char* command, edr_ring ring, const char* const* args,
                                size_t nargs, size_t cap, char** json, int* verified);

#ifdef __cplusplus
}
#endif

#endif
