#ifndef TOPOMATCH_H
#define TOPOMATCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum TmStatus {
  TmOk = 0,
  /**
   * A degenerate geometric contact (overlap, endpoint pass-through).
   */
  TmErrDegeneracy = 1,
  /**
   * A structural guarantee of the algorithm failed on this input.
   */
  TmErrGuarantee = 2,
  TmErrClaim = 3,
  TmErrEquivalence = 4,
  TmErrGeneration = 5,
  TmErrLimit = 6,
  TmErrInvalid = 7,
  TmErrNotSimple = 8,
  TmErrIo = 9,
  TmErrParse = 10,
  /**
   * A required pointer argument was null.
   */
  TmErrNull = 11,
} TmStatus;

/**
 * Opaque handle to a drawing.
 */
typedef struct TmDrawing TmDrawing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a drawing from its JSON representation.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string, `out` a valid pointer.
 */
enum TmStatus tm_drawing_from_json(const char *json, struct TmDrawing **out);

/**
 * Release a drawing handle. Null is a no-op.
 *
 * # Safety
 * `d` must come from `tm_drawing_from_json` and not be freed twice.
 */
void tm_drawing_free(struct TmDrawing *d);

/**
 * Number of vertices, or 0 for null.
 *
 * # Safety
 * `d` must be a live handle or null.
 */
uintptr_t tm_drawing_n(const struct TmDrawing *d);

/**
 * Validate simplicity. Returns `TmOk` for a simple drawing,
 * `TmErrNotSimple` otherwise; `summary_out` (optional) receives a
 * human-readable report either way.
 *
 * # Safety
 * `d` must be a live handle; `summary_out` valid or null.
 */
enum TmStatus tm_validate(const struct TmDrawing *d, char **summary_out);

/**
 * Run the matching pipeline. `root` is a vertex id, or negative for the
 * best over all roots. On success `json_out` receives the result as JSON.
 *
 * # Safety
 * `d` must be a live handle, `json_out` a valid pointer.
 */
enum TmStatus tm_solve(const struct TmDrawing *d, int64_t root, char **json_out);

/**
 * Exact maximum disjoint matching size by branch and bound, with a node
 * budget.
 *
 * # Safety
 * `d` must be a live handle, `optimum_out` a valid pointer.
 */
enum TmStatus tm_oracle(const struct TmDrawing *d, uint64_t node_limit, uintptr_t *optimum_out);

/**
 * Release a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void tm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOPOMATCH_H */
