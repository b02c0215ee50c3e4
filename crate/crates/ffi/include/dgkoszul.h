#ifndef DGKOSZUL_H
#define DGKOSZUL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DgkKind {
  DGK_KIND_DGA = 0,
  DGK_KIND_DGLA = 1,
  DGK_KIND_FORMAL = 2,
} DgkKind;

/**
 * Result codes. `DGK_STATUS_OK` is zero.
 */
typedef enum DgkStatus {
  DGK_STATUS_OK = 0,
  DGK_STATUS_NULL_ARGUMENT = 1,
  DGK_STATUS_INVALID_UTF8 = 2,
  DGK_STATUS_PARSE = 3,
  DGK_STATUS_VALIDATION = 4,
  DGK_STATUS_UNKNOWN_FIXTURE = 5,
  DGK_STATUS_UNKNOWN_LABEL = 6,
  DGK_STATUS_WRONG_KIND = 7,
  DGK_STATUS_NOT_MAURER_CARTAN = 8,
  DGK_STATUS_NOT_NILPOTENT = 9,
  DGK_STATUS_NOT_COMMUTATIVE = 10,
  DGK_STATUS_VERIFICATION = 11,
  DGK_STATUS_OTHER = 12,
  DGK_STATUS_PANIC = 13,
} DgkStatus;

/**
 * An algebra or presentation.
 */
typedef struct DgkStructure DgkStructure;

/**
 * Last error message on this thread, or null if there was none. The copy
 * must be released with `dgk_string_free`.
 */
char *dgk_last_error_message(void);

void dgk_clear_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void dgk_string_free(char *s);

/**
 * # Safety
 * `h` must be null or a handle returned by this library, not yet freed.
 */
void dgk_structure_free(struct DgkStructure *h);

/**
 * Loads a built-in fixture such as `"sl2"` or `"interval"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum DgkStatus dgk_fixture_load(const char *name, struct DgkStructure **out);

/**
 * Parses the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum DgkStatus dgk_structure_parse(const char *text, struct DgkStructure **out);

/**
 * Canonical text of a structure.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_structure_print(const struct DgkStructure *h, char **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_structure_kind(const struct DgkStructure *h, enum DgkKind *out);

/**
 * Dimension of the underlying space (number of generators for a
 * presentation).
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_structure_dim(const struct DgkStructure *h, size_t *out);

/**
 * Runs the axiom checks. `report` may be null; otherwise it receives the
 * rendered report, to be released with `dgk_string_free`.
 *
 * # Safety
 * `h` must be a live handle; `passed` must be writable.
 */
enum DgkStatus dgk_check_axioms(const struct DgkStructure *h, bool *passed, char **report);

/**
 * Maurer-Cartan test for an element written as `"x - 3/2*y"`.
 *
 * # Safety
 * `h` must be a live handle, `element` a NUL-terminated string, `out`
 * writable.
 */
enum DgkStatus dgk_mc_check(const struct DgkStructure *h, const char *element, bool *out);

/**
 * Chevalley-Eilenberg presentation of a dg Lie algebra.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_ce(const struct DgkStructure *h, struct DgkStructure **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_bar(const struct DgkStructure *h, struct DgkStructure **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_cobar(const struct DgkStructure *h, struct DgkStructure **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum DgkStatus dgk_harrison(const struct DgkStructure *h, struct DgkStructure **out);

/**
 * Betti numbers in degrees `lo..=hi`, written to `dims[0..=hi-lo]`.
 * Presentations are truncated at `weight` first; finite algebras ignore it.
 *
 * # Safety
 * `h` must be a live handle; `dims` must have room for `hi - lo + 1`
 * entries.
 */
enum DgkStatus dgk_betti(const struct DgkStructure *h,
                         size_t weight,
                         int64_t lo,
                         int64_t hi,
                         size_t *dims);

/**
 * Runs the command line with `argc` arguments (without the program name).
 * The report goes to `output`, the exit code to `exit_code`.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; the output pointers
 * must be writable.
 */
enum DgkStatus dgk_run(int argc, const char *const *argv, char **output, int *exit_code);

/**
 * Library version, statically allocated.
 */
const char *dgk_version(void);

#endif  /* DGKOSZUL_H */
