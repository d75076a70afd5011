#ifndef VFALG_H
#define VFALG_H

/* C interface to the vector field algebra library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned as char* are owned by the caller and released with
 * vfalg_string_free. Every fallible call returns a vfalg_status; on failure
 * the message and a JSON error object are available from vfalg_last_error
 * and vfalg_last_error_json on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VFALG_BUILDING)
#    define VFALG_API __declspec(dllexport)
#  else
#    define VFALG_API __declspec(dllimport)
#  endif
#else
#  define VFALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vfalg_field vfalg_field;
typedef struct vfalg_poly vfalg_poly;
typedef struct vfalg_result vfalg_result;

typedef enum vfalg_status {
  VFALG_OK = 0,
  VFALG_INVALID_ARGUMENT = 1,
  VFALG_PARSE = 2,
  VFALG_WINDOW = 3,
  VFALG_INCONSISTENT = 4,
  VFALG_SCHEMA = 5,
  VFALG_INTERNAL = 6
} vfalg_status;

typedef enum vfalg_mode { VFALG_STRICT = 0, VFALG_PROJECT = 1 } vfalg_mode;

/* Variables and directions <= max_var, field degrees in
 * [degree_min, degree_max]. */
typedef struct vfalg_window {
  int max_var;
  int degree_min;
  int degree_max;
  vfalg_mode mode;
} vfalg_window;

VFALG_API const char* vfalg_version(void);
VFALG_API const char* vfalg_status_name(vfalg_status status);

/* Valid until the next failing call on the same thread. Empty after success. */
VFALG_API const char* vfalg_last_error(void);
VFALG_API const char* vfalg_last_error_json(void);
VFALG_API void vfalg_string_free(char* s);

/* Fields */
VFALG_API vfalg_status vfalg_field_parse(const char* text, vfalg_field** out);
VFALG_API vfalg_status vfalg_field_from_json(const char* json, vfalg_field** out);
VFALG_API vfalg_status vfalg_field_euler(int n, vfalg_field** out);
VFALG_API vfalg_field* vfalg_field_clone(const vfalg_field* w);
VFALG_API void vfalg_field_free(vfalg_field* w);
VFALG_API char* vfalg_field_print(const vfalg_field* w);
VFALG_API char* vfalg_field_to_json(const vfalg_field* w);
VFALG_API int vfalg_field_equal(const vfalg_field* a, const vfalg_field* b);
VFALG_API int vfalg_field_is_zero(const vfalg_field* w);
VFALG_API vfalg_status vfalg_bracket(const vfalg_field* u, const vfalg_field* w, vfalg_field** out);

/* Polynomials */
VFALG_API vfalg_status vfalg_poly_parse(const char* text, vfalg_poly** out);
VFALG_API void vfalg_poly_free(vfalg_poly* p);
VFALG_API char* vfalg_poly_print(const vfalg_poly* p);
VFALG_API vfalg_status vfalg_apply(const vfalg_field* w, const vfalg_poly* p, vfalg_poly** out);

/* Computations. `family` is "sl" or "L". Each produces a result holding
 * text and JSON renderings, a list of fields and a scalar value. */

/* Basis of the centralizer of family(n) in the window; value = dimension. */
VFALG_API vfalg_status vfalg_centralizer(const char* family, int n, const vfalg_window* window,
                                         vfalg_result** out);
/* H^1 of sl_n with values in degree-k fields over x_1..x_max_var; value = dimension. */
VFALG_API vfalg_status vfalg_h1(int n, int k, int max_var, vfalg_result** out);
/* sl_n-submodule generated by v inside the window; value = dimension. */
VFALG_API vfalg_status vfalg_closure(const vfalg_field* v, int n, const vfalg_window* window,
                                     vfalg_result** out);
/* Recovers w from d = ad(w) on family(n). Fields: the solution, then the
 * kernel basis; value = kernel dimension. An unsolvable system returns
 * VFALG_INCONSISTENT with the certificate in the error JSON. */
VFALG_API vfalg_status vfalg_solve_inner_from_ad(const char* family, int n, const vfalg_field* w,
                                                 const vfalg_window* window, vfalg_result** out);
/* Same, from a JSON derivation spec. */
VFALG_API vfalg_status vfalg_solve_inner_from_json(const char* spec_json, const vfalg_window* window,
                                                   vfalg_result** out);
/* task is "centralizer" or "solve-inner"; inner may be NULL for the
 * centralizer task. ok = every trajectory stabilized; fields: the limit. */
VFALG_API vfalg_status vfalg_stabilize(const char* task, const char* family, const vfalg_field* inner,
                                       int n_from, int n_to, int extra_vars, int degree_min,
                                       int degree_max, vfalg_mode mode, vfalg_result** out);
/* Property suites; ok = all items passed. */
VFALG_API vfalg_status vfalg_verify(const char* suite, uint64_t seed, vfalg_result** out);
/* Closed-form bracket identities for w and indices i != j; ok = all hold. */
VFALG_API vfalg_status vfalg_identities(const vfalg_field* w, int i, int j, vfalg_result** out);
/* Dimension of windowed derivation tables vanishing on L_basis(n). */
VFALG_API vfalg_status vfalg_rigidity(int n, int degree_max, vfalg_result** out);

VFALG_API char* vfalg_result_text(const vfalg_result* r);
VFALG_API char* vfalg_result_json(const vfalg_result* r);
VFALG_API size_t vfalg_result_field_count(const vfalg_result* r);
/* New handle owned by the caller; NULL when out of range. */
VFALG_API vfalg_field* vfalg_result_field_at(const vfalg_result* r, size_t index);
VFALG_API long long vfalg_result_value(const vfalg_result* r);
VFALG_API int vfalg_result_ok(const vfalg_result* r);
VFALG_API void vfalg_result_free(vfalg_result* r);

#ifdef __cplusplus
}
#endif

#endif /* VFALG_H */
