#ifndef TROP3_H
#define TROP3_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TROP3_NPTS 20

#define TROP3_NFACETS 27

#define TROP3_NMOTIFS 10

typedef enum {
  TROP3_STATUS_OK = 0,
  TROP3_STATUS_NULL_POINTER = 1,
  TROP3_STATUS_INVALID_ARGUMENT = 2,
  TROP3_STATUS_INVALID_TRIANGULATION = 3,
  TROP3_STATUS_NOT_GENERIC = 4,
  TROP3_STATUS_DEGENERATE_LINE = 5,
  TROP3_STATUS_INTERNAL = 6,
} Trop3Status;

/**
 * Opaque handle to a validated unimodular triangulation of 3Δ3.
 */
typedef struct Trop3Triangulation Trop3Triangulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or "" after a success.
 * The pointer stays valid until the next library call on this thread.
 */
const char *trop3_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void trop3_string_free(char *s);

/**
 * # Safety
 * `t` must be null or a handle returned by this library, not yet freed.
 */
void trop3_triangulation_free(Trop3Triangulation *t);

/**
 * Validate 27 facets given as 108 point labels, four per facet.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_from_facets(const uint32_t *labels,
                                            size_t nfacets,
                                            Trop3Triangulation **out);

/**
 * Parse a facet list such as `{{0,1,4,10},...}` or its JSON form.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_parse(const char *text,
                                      Trop3Triangulation **out);

/**
 * Dual triangulation of a tropical cubic with 20 integer coefficients.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_from_heights(const int64_t *heights,
                                             size_t n,
                                             Trop3Triangulation **out);

/**
 * Built-in examples: 0 for the typical triangulation, 1 for the honeycomb.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_example(uint32_t which,
                                        Trop3Triangulation **out);

/**
 * Writes 108 labels, facets in sorted order.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_facets(const Trop3Triangulation *t,
                                       uint32_t *out);

/**
 * Writes the 20 GKZ entries.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_gkz(const Trop3Triangulation *t,
                                    uint32_t *out);

/**
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_canonical_key(const Trop3Triangulation *t,
                                              uint64_t *out);

/**
 * Altshuler determinant as a decimal string.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_altshuler(const Trop3Triangulation *t,
                                          char **out);

/**
 * Number of facets of the secondary cone.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_secondary_facet_count(const Trop3Triangulation *t,
                                        size_t *out);

/**
 * Occurrence counts of the ten motifs, in catalog order 3A..3J.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_motif_counts(const Trop3Triangulation *t,
                               size_t *out);

/**
 * Full annotated record (motifs with visibility, walls and equations) as one JSON line.
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_triangulation_record_json(const Trop3Triangulation *t,
                                            uint64_t id,
                                            char **out);

/**
 * Whether the line with integer Plücker vector `p` (6 entries) lies on the
 * surface with integer coefficients `heights` (20 entries).
 *
 * # Safety
 * Pointer arguments must be null or valid for the documented number of elements; handles must be live.
 */
Trop3Status trop3_line_on_surface(const int64_t *pluecker,
                                  const int64_t *heights,
                                  bool *contained);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROP3_H */
