#ifndef YBX_H
#define YBX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum {
  /**
   * Success.
   */
  YBX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  YBX_STATUS_NULL_ARGUMENT = 1,
  /**
   * The input could not be parsed as a solution document.
   */
  YBX_STATUS_PARSE_ERROR = 2,
  /**
   * The operation needs a symmetric non-degenerate solution.
   */
  YBX_STATUS_INVALID_SOLUTION = 3,
  /**
   * The request exceeds a documented size limit.
   */
  YBX_STATUS_UNSUPPORTED = 4,
  /**
   * A theorem-level cross-check failed; see the last error message.
   */
  YBX_STATUS_INTERNAL_ERROR = 5,
} YbxStatus;

/**
 * Opaque handle to a validated solution table.
 */
typedef struct YbxSolution YbxSolution;

/**
 * Axiom verdicts for one solution.
 */
typedef struct {
  bool nondegenerate;
  bool involutive;
  bool braided;
  bool symmetric;
  bool qybe;
  bool unitary;
} YbxAxioms;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the message of the most recent error on this thread into `buf`
 * (truncated, always nul-terminated when `len > 0`) and return the full
 * message length in bytes, excluding the terminator.
 *
 * # Safety
 * `buf` must point to `len` writable bytes, or be null (query mode).
 */
uintptr_t ybx_last_error_message(char *buf, uintptr_t len);

/**
 * Parse a solution document (JSON, any of the three kinds) and return a
 * handle to the validated table.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be a valid pointer.
 */
YbxStatus ybx_solution_parse_json(const char *json, YbxSolution **out);

/**
 * Release a handle obtained from `ybx_solution_parse_json`. Null is a
 * no-op.
 *
 * # Safety
 * `handle` must come from `ybx_solution_parse_json` and not be freed twice.
 */
void ybx_solution_free(YbxSolution *handle);

/**
 * Release a string obtained from any `*_json` output parameter. Null is
 * a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ybx_string_free(char *s);

/**
 * Number of elements of the underlying set, or -1 for a null handle.
 *
 * # Safety
 * `handle` must be valid or null.
 */
int32_t ybx_solution_size(const YbxSolution *handle);

/**
 * Evaluate the solution axioms and R-matrix conditions.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_axioms(const YbxSolution *handle, YbxAxioms *out);

/**
 * Full analysis report (invariant subsets, parabolics, decomposability,
 * Δ-classes) as JSON.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_analysis_json(const YbxSolution *handle, char **out);

/**
 * Divisor-lattice dump as JSON.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_lattice_json(const YbxSolution *handle, char **out);

/**
 * Folding reports as JSON; set `strong_only` to keep only foldings whose
 * blocks generate standard parabolic subgroups.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_foldings_json(const YbxSolution *handle, bool strong_only, char **out);

/**
 * The defining relations of the structure monoid as JSON
 * (`{"n": ..., "relations": [[[i,j],[k,l]], ...]}`, 1-based).
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_presentation_json(const YbxSolution *handle, char **out);

/**
 * Canonical table-kind document for the solution, as JSON.
 *
 * # Safety
 * `handle` and `out` must be valid pointers.
 */
YbxStatus ybx_solution_document_json(const YbxSolution *handle, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* YBX_H */
