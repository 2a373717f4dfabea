#ifndef FLIPDIST_H
#define FLIPDIST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FdStatus {
  FD_STATUS_OK = 0,
  FD_STATUS_NULL_POINTER = 1,
  FD_STATUS_INVALID_UTF8 = 2,
  FD_STATUS_SYNTAX = 3,
  FD_STATUS_INVALID_TRIANGULATION = 4,
  FD_STATUS_MISMATCHED_SIZE = 5,
  FD_STATUS_SIZE_LIMIT = 6,
  FD_STATUS_CAP_EXCEEDED = 7,
  FD_STATUS_MISSING_BUDGET = 8,
  FD_STATUS_INDEX_OUT_OF_RANGE = 9,
  FD_STATUS_PANIC = 10,
} FdStatus;

/**
 * Two triangulations of the same polygon and an optional budget.
 */
typedef struct FdInstance FdInstance;

/**
 * A shortest flip sequence.
 */
typedef struct FdWitness FdWitness;

/**
 * A flip of diagonal `(a, b)` into `(c, d)`.
 */
typedef struct FdFlip {
  uint32_t a;
  uint32_t b;
  uint32_t c;
  uint32_t d;
} FdFlip;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the text instance format from a NUL-terminated UTF-8 string.
 *
 * # Safety
 * `text` must be a valid C string; `out_instance` must be writable.
 */
enum FdStatus fd_instance_parse(const char *text, struct FdInstance **out_instance);

/**
 * Builds an instance from flat endpoint arrays `[a0, b0, a1, b1, ...]`
 * (`*_len` counts integers). The instance has no budget.
 *
 * # Safety
 * Each array must hold `*_len` readable integers; `out_instance` must be writable.
 */
enum FdStatus fd_instance_new(uint32_t m,
                              const uint32_t *init,
                              size_t init_len,
                              const uint32_t *target,
                              size_t target_len,
                              struct FdInstance **out_instance);

/**
 * Releases an instance. Null is ignored.
 *
 * # Safety
 * `instance` must come from this library and not be used afterwards.
 */
void fd_instance_free(struct FdInstance *instance);

/**
 * Sets the flip budget; a negative value clears it.
 *
 * # Safety
 * `instance` must be a live handle.
 */
enum FdStatus fd_instance_set_k(struct FdInstance *instance, int64_t k);

/**
 * Polygon vertex count.
 *
 * # Safety
 * `instance` must be a live handle; `out_m` writable.
 */
enum FdStatus fd_instance_m(const struct FdInstance *instance, uint32_t *out_m);

/**
 * Diagonal count of each triangulation.
 *
 * # Safety
 * `instance` must be a live handle; `out_phi` writable.
 */
enum FdStatus fd_instance_phi(const struct FdInstance *instance, uint32_t *out_phi);

/**
 * Serializes to the text format. Free the result with `fd_string_free`.
 *
 * # Safety
 * `instance` must be a live handle; `out_text` writable.
 */
enum FdStatus fd_instance_serialize(const struct FdInstance *instance, char **out_text);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void fd_string_free(char *s);

/**
 * Exact flip distance.
 *
 * # Safety
 * `instance` must be a live handle; `out_distance` writable.
 */
enum FdStatus fd_distance(const struct FdInstance *instance, uint32_t *out_distance);

/**
 * Decides whether the distance is at most `k`.
 *
 * # Safety
 * `instance` must be a live handle; `out_yes` writable.
 */
enum FdStatus fd_decide(const struct FdInstance *instance, uint32_t k, bool *out_yes);

/**
 * Decides against the instance's own budget; `FD_STATUS_MISSING_BUDGET`
 * if it has none.
 *
 * # Safety
 * `instance` must be a live handle; `out_yes` writable.
 */
enum FdStatus fd_solve_decision(const struct FdInstance *instance, bool *out_yes);

/**
 * Distance by breadth-first search over the whole flip graph (m <= 14).
 *
 * # Safety
 * `instance` must be a live handle; `out_distance` writable.
 */
enum FdStatus fd_oracle_distance(const struct FdInstance *instance, uint32_t *out_distance);

/**
 * Whether the pair is solved by free flips alone; if so `out_distance`
 * receives the distance, otherwise it is left untouched.
 *
 * # Safety
 * `instance` must be a live handle; outputs writable.
 */
enum FdStatus fd_is_trivial(const struct FdInstance *instance,
                            bool *out_trivial,
                            uint32_t *out_distance);

/**
 * Computes a shortest flip sequence. Free it with `fd_witness_free`.
 *
 * # Safety
 * `instance` must be a live handle; `out_witness` writable.
 */
enum FdStatus fd_witness(const struct FdInstance *instance, struct FdWitness **out_witness);

/**
 * Number of flips in the witness; 0 for null.
 *
 * # Safety
 * `witness` must be a live handle or null.
 */
size_t fd_witness_len(const struct FdWitness *witness);

/**
 * The `index`-th flip of the witness.
 *
 * # Safety
 * `witness` must be a live handle; `out_flip` writable.
 */
enum FdStatus fd_witness_get(const struct FdWitness *witness,
                             size_t index,
                             struct FdFlip *out_flip);

/**
 * Releases a witness. Null is ignored.
 *
 * # Safety
 * `witness` must come from this library and not be used afterwards.
 */
void fd_witness_free(struct FdWitness *witness);

/**
 * Message for the last failed call on this thread, empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *fd_last_error_message(void);

/**
 * Library version as a static C string.
 */
const char *fd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLIPDIST_H */
