/* C interface to the Grassmann star-product engine.
 *
 * Every function returns a gstar_status. On failure a message is available
 * from gstar_last_error() on the calling thread. Strings returned through
 * `char**` are owned by the caller and released with gstar_string_free.
 * Elements are opaque handles released with gstar_element_destroy.
 */
#ifndef GSTAR_GSTAR_H
#define GSTAR_GSTAR_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(GSTAR_BUILDING_LIBRARY)
#define GSTAR_API __declspec(dllexport)
#else
#define GSTAR_API __declspec(dllimport)
#endif
#else
#define GSTAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gstar_status {
  GSTAR_OK = 0,
  GSTAR_INVALID_ARGUMENT = -1, /* malformed input, unknown suite or option out of range */
  GSTAR_DIMENSION = -2,        /* operands from different algebras */
  GSTAR_PARSE = -3,            /* expression syntax error */
  GSTAR_DOMAIN = -4,           /* precondition on a value does not hold */
  GSTAR_NOT_CONVERGED = -5,    /* truncated series hit its term bound */
  GSTAR_NULL_POINTER = -6,
  GSTAR_INTERNAL = -99
} gstar_status;

typedef enum gstar_product { GSTAR_PRODUCT_COHERENT = 0, GSTAR_PRODUCT_SYMMETRIC = 1 } gstar_product;

typedef enum gstar_sector {
  GSTAR_SECTOR_AUTO = 0,
  GSTAR_SECTOR_FERMIONIC = 1,
  GSTAR_SECTOR_SUPER = 2
} gstar_sector;

typedef struct gstar_options {
  unsigned n;        /* fermionic modes */
  double hbar;       /* deformation parameter, >= 0 */
  int product;       /* gstar_product */
  int sector;        /* gstar_sector, used by expression evaluation */
  unsigned cutoff;   /* bosonic Fock cutoff */
  uint64_t seed;
  unsigned trials;
} gstar_options;

/* A Grassmann element or a super symbol. */
typedef struct gstar_element gstar_element;

GSTAR_API void gstar_options_default(gstar_options* out);

GSTAR_API const char* gstar_last_error(void);
GSTAR_API const char* gstar_status_name(int status);
GSTAR_API void gstar_string_free(char* s);

/* Parses and evaluates an expression such as "t1 @ tb1" or "z @s zb". */
GSTAR_API int gstar_element_parse(const char* source, const gstar_options* options, gstar_element** out);
/* Reads {"n", "terms"} for Grassmann elements or {"representation", "components"} for super symbols. */
GSTAR_API int gstar_element_from_json(const char* json, gstar_element** out);
GSTAR_API int gstar_element_to_json(const gstar_element* e, char** out);
GSTAR_API int gstar_element_to_text(const gstar_element* e, char** out);
/* Fermionic mode count; 1 for super symbols. */
GSTAR_API int gstar_element_modes(const gstar_element* e, unsigned* out);
/* 1 for super symbols, 0 for Grassmann elements. */
GSTAR_API int gstar_element_is_super(const gstar_element* e, int* out);
GSTAR_API void gstar_element_destroy(gstar_element* e);

/* Star product chosen by options->product and options->hbar; super symbols use the super product. */
GSTAR_API int gstar_star(const gstar_element* a, const gstar_element* b, const gstar_options* options,
                         gstar_element** out);

/* Evaluates an expression and writes {"text", "value"} JSON. */
GSTAR_API int gstar_eval(const char* source, const gstar_options* options, char** json_out);

/* Runs a suite (fermionic, covariance, oscillator, fermion-oscillator, susy, all) and writes the
 * report JSON. *all_passed is set to 1 when every gated check is within tolerance. */
GSTAR_API int gstar_check(const char* suite, const gstar_options* options, char** json_out, int* all_passed);

/* U and V for an antisymmetric alpha given as [[[re, im], ...], ...]. If element_json is not NULL the
 * covariance residual of that element is included. Writes {U, V, canonical_residual, covariance_residual}. */
GSTAR_API int gstar_bogoliubov(const char* alpha_json, const char* element_json, char** json_out);

/* Star products of options->trials random pairs against the Fock oracle at options->n modes.
 * Writes {max_residual, trials, pass}; *pass is 1 when max_residual < 1e-12. */
GSTAR_API int gstar_oracle_compare(const gstar_options* options, char** json_out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* GSTAR_GSTAR_H */
