#ifndef FRAMELINK_H
#define FRAMELINK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. `FL_STATUS_OK` is zero; the rest name the failing layer.
 */
typedef enum FlStatus {
  FL_STATUS_OK = 0,
  FL_STATUS_NULL_POINTER = 1,
  FL_STATUS_INVALID_UTF8 = 2,
  FL_STATUS_CODEC = 3,
  FL_STATUS_DIAGRAM = 4,
  FL_STATUS_INVARIANT = 5,
  FL_STATUS_MOVE = 6,
  FL_STATUS_TORUS = 7,
  FL_STATUS_SURGERY = 8,
  FL_STATUS_GEOMETRY = 9,
  FL_STATUS_OUT_OF_RANGE = 10,
  FL_STATUS_BUFFER_TOO_SMALL = 11,
  FL_STATUS_PANIC = 12,
} FlStatus;

/**
 * A framed link: a planar diagram plus one integer framing per component.
 */
typedef struct FlLink FlLink;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last error on this thread, or null. Valid until the next
 * library call on the same thread.
 */
const char *fl_last_error_message(void);

/**
 * Stable error code of the last error on this thread (e.g. "ArcCountError"),
 * or null.
 */
const char *fl_last_error_code(void);

void fl_string_free(char *s);

/**
 * Parses a PD code; the link gets its blackboard framing.
 */
enum FlStatus fl_link_from_pd(const char *pd, struct FlLink **out);

/**
 * Parses a framed-link JSON document `{"pd": ..., "framings": [...]}`.
 */
enum FlStatus fl_link_from_json(const char *json, struct FlLink **out);

/**
 * Builds a link from a PD code and explicit framings.
 */
enum FlStatus fl_link_new(const char *pd,
                          const int64_t *framings,
                          size_t n_framings,
                          struct FlLink **out);

void fl_link_free(struct FlLink *l);

enum FlStatus fl_link_component_count(const struct FlLink *l, size_t *out);

enum FlStatus fl_link_crossing_count(const struct FlLink *l, size_t *out);

/**
 * Canonical PD text of the diagram.
 */
enum FlStatus fl_link_pd(const struct FlLink *l, char **out);

/**
 * Canonical JSON document with framings.
 */
enum FlStatus fl_link_json(const struct FlLink *l, char **out);

enum FlStatus fl_link_writhe(const struct FlLink *l, int64_t *out);

enum FlStatus fl_link_framing(const struct FlLink *l, size_t i, int64_t *out);

enum FlStatus fl_link_linking_number(const struct FlLink *l, size_t i, size_t j, int64_t *out);

/**
 * Writes the n×n linking matrix row-major into `buf` (capacity `len`) and
 * sets `*n`. Returns `FL_STATUS_BUFFER_TOO_SMALL` with `*n` set when `len`
 * is below n².
 */
enum FlStatus fl_link_linking_matrix(const struct FlLink *l, int64_t *buf, size_t len, size_t *n);

/**
 * Bounded framed equivalence search with the default budget. `*out` is 1
 * when a move sequence was found and 0 otherwise; `report` (optional)
 * receives the JSON result with the path or the reason.
 */
enum FlStatus fl_link_framed_equivalent(const struct FlLink *a,
                                        const struct FlLink *b,
                                        int32_t *out,
                                        char **report);

/**
 * Surgery on the link with its integer framings. Writes a JSON object with
 * `recognized`, `evidence` and `H1`.
 */
enum FlStatus fl_link_surgery(const struct FlLink *l, char **out);

/**
 * Surgery from a JSON document that may carry rational `coefficients`.
 */
enum FlStatus fl_surgery_from_json(const char *json, char **out);

/**
 * 1 if a*[meridian] + b*[longitude] is a simple closed curve class.
 */
int32_t fl_torus_is_embeddable(int64_t a, int64_t b);

/**
 * Longitude class n*[meridian] + 1*[longitude] of framing n.
 */
enum FlStatus fl_torus_framing_to_longitude(int64_t n, int64_t *meridian, int64_t *longitude);

enum FlStatus fl_torus_longitude_to_framing(int64_t meridian, int64_t longitude, int64_t *out);

/**
 * Gauss linking number of two closed polygons given as `n` xyz triples.
 */
enum FlStatus fl_gauss_linking(const double *a,
                               size_t na,
                               const double *b,
                               size_t nb,
                               int64_t *out);

/**
 * Projects closed polygons to a planar diagram. `counts[i]` is the vertex
 * count of curve i; `xyz` holds all vertices back to back.
 */
enum FlStatus fl_project_curves(const double *xyz,
                                const size_t *counts,
                                size_t n_curves,
                                uint64_t seed,
                                struct FlLink **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRAMELINK_H */
