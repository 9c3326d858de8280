#ifndef SEMICLASS_H
#define SEMICLASS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes; zero is success.
 */
typedef enum {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_UTF8 = 2,
  SC_STATUS_PARSE = 3,
  SC_STATUS_UNKNOWN_PRESET = 4,
  SC_STATUS_NO_R_MATRIX = 5,
  SC_STATUS_INVALID_INPUT = 6,
  SC_STATUS_MISSING_OMEGA_LOWER = 7,
  SC_STATUS_OUT_OF_RANGE = 8,
  SC_STATUS_PANIC = 9,
} ScStatus;

/**
 * A Lie algebra with an optional stored r-matrix.
 */
typedef struct ScAlgebra ScAlgebra;

/**
 * A polynomial Poisson chart.
 */
typedef struct ScChart ScChart;

/**
 * A dense exact tensor.
 */
typedef struct ScTensor ScTensor;

/**
 * Message for the last failure on this thread; empty after a success.
 * Valid until the next `sc_*` call on the same thread.
 */
const char *sc_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, freed once.
 */
void sc_string_free(char *s);

/**
 * One of `sl2`, `sl3`, `sl4`, `so5`, `b2`, with its stored r-matrix if any.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
ScStatus sc_algebra_preset(const char *name, ScAlgebra **out);

/**
 * Parses the algebra JSON schema `{dim, basis_names, f, r?}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
ScStatus sc_algebra_from_json(const char *json, ScAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, freed once.
 */
void sc_algebra_free(ScAlgebra *a);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sc_algebra_dim(const ScAlgebra *a);

/**
 * `[[r, r]]` as a rank-3 tensor.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
ScStatus sc_cybe_residual(const ScAlgebra *a, ScTensor **out);

/**
 * The cobracket `δ = dr`, input leg first.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
ScStatus sc_cobracket(const ScAlgebra *a, ScTensor **out);

/**
 * The canonical `Ξ`, whose `Ξ̂` vanishes.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
ScStatus sc_canonical_xi(const ScAlgebra *a, ScTensor **out);

/**
 * Curvature obstruction for `xihat`; a null `xihat` means `Ξ̂ = 0`.
 *
 * # Safety
 * `a` must be a live handle, `xihat` null or live; `out` must be writable.
 */
ScStatus sc_j1_obstruction(const ScAlgebra *a, const ScTensor *xihat, ScTensor **out);

/**
 * Dimension of the space of ad-invariant `Ξ̂`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
ScStatus sc_moduli_dimension(const ScAlgebra *a, size_t *out);

/**
 * Builds a tensor from nested JSON arrays of rational strings.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
ScStatus sc_tensor_from_json(const char *json, size_t rank, size_t dim, ScTensor **out);

/**
 * # Safety
 * `t` must be null or a handle from this library, freed once.
 */
void sc_tensor_free(ScTensor *t);

/**
 * # Safety
 * `t` must be null or a live handle.
 */
size_t sc_tensor_rank(const ScTensor *t);

/**
 * # Safety
 * `t` must be null or a live handle.
 */
size_t sc_tensor_dim(const ScTensor *t);

/**
 * Exact zero test.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
ScStatus sc_tensor_is_zero(const ScTensor *t, bool *out);

/**
 * One entry as a `"p/q"` string; `index` holds `rank` indices.
 *
 * # Safety
 * `t` must be a live handle, `index` valid for `len` reads, `out` writable.
 */
ScStatus sc_tensor_entry(const ScTensor *t, const size_t *index, size_t len, char **out);

/**
 * Nested JSON arrays of `"p/q"` strings.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
ScStatus sc_tensor_to_json(const ScTensor *t, char **out);

/**
 * Parses the chart JSON schema `{n, omega, gamma, omega_lower?}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
ScStatus sc_chart_from_json(const char *json, ScChart **out);

/**
 * The constant symplectic torus chart.
 *
 * # Safety
 * `out` must be writable.
 */
ScStatus sc_chart_torus(ScChart **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, freed once.
 */
void sc_chart_free(ScChart *c);

/**
 * `∇ω = 0` and `T = 0`; needs `omega_lower`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
ScStatus sc_chart_is_central(const ScChart *c, bool *out);

/**
 * Runs the command line with `argc` arguments (without the program name).
 * Writes the exit code to `out_code` and, unless it is 1, the JSON report
 * to `out_json`. Exit code 1 also returns `SC_STATUS_INVALID_INPUT`.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; outputs must be writable.
 */
ScStatus sc_cli_run(size_t argc, const char *const *argv, char **out_json, int32_t *out_code);

#endif  /* SEMICLASS_H */
