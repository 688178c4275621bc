#ifndef EQUITANGENT_H
#define EQUITANGENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call. `EQT_STATUS_OK` is zero.
typedef enum EqtStatus {
  EQT_STATUS_OK = 0,
  EQT_STATUS_CONCENTRIC_CIRCLES = 1,
  EQT_STATUS_POINT_NOT_EXTERIOR = 2,
  EQT_STATUS_TANGENCY_NOT_FOUND = 3,
  EQT_STATUS_NOT_ON_RADICAL_AXIS = 4,
  EQT_STATUS_POINT_INSIDE_HULL = 5,
  EQT_STATUS_ARCS_DO_NOT_CLOSE = 6,
  EQT_STATUS_EVEN_N = 7,
  EQT_STATUS_NON_POSITIVE_LAMBDA = 8,
  EQT_STATUS_NOT_IN_UPPER_HALF_PLANE = 9,
  EQT_STATUS_ENDPOINT_MISMATCH = 10,
  EQT_STATUS_NOT_EQUITANGENT_AT_SAMPLE = 11,
  EQT_STATUS_X_AT_TANGENCY = 12,
  EQT_STATUS_NOT_ON_LINE = 13,
  EQT_STATUS_CONTINUATION_FAILED = 14,
  EQT_STATUS_NOT_ON_SURFACE = 15,
  EQT_STATUS_NOT_EQUITANGENT_SOURCE = 16,
  EQT_STATUS_EMPTY_CONTACT_CURVE = 17,
  EQT_STATUS_INVALID_CURVE = 18,
  EQT_STATUS_INVALID_INPUT = 19,
  // A required pointer argument was null.
  EQT_STATUS_NULL_POINTER = 100,
  // A string argument was not valid UTF-8.
  EQT_STATUS_INVALID_UTF8 = 101,
  // The library panicked; this is a bug.
  EQT_STATUS_PANIC = 102,
} EqtStatus;

// Opaque planar convex curve.
typedef struct EqtCurve EqtCurve;

// Opaque convex surface.
typedef struct EqtSurface EqtSurface;

// One tangency from an exterior point.
typedef struct EqtTangent {
  double x;
  double y;
  // Distance from the source point to the tangency point.
  double length;
  // Outward-normal angle at the tangency point.
  double param;
} EqtTangent;

typedef struct EqtLengthSpread {
  double min;
  double max;
  double spread;
} EqtLengthSpread;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, empty after a success.
// The pointer stays valid until the next call on this thread.
const char *eqt_last_error_message(void);

// Stable name of a status code, as a static string.
const char *eqt_status_name(enum EqtStatus status);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void eqt_string_free(char *s);

// Parses a curve document (support samples or arc spline).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid for writes.
enum EqtStatus eqt_curve_from_json(const char *json, struct EqtCurve **out);

// Serializes a curve; release the result with [`eqt_string_free`].
//
// # Safety
// `curve` must be a live handle; `out` must be valid for writes.
enum EqtStatus eqt_curve_to_json(const struct EqtCurve *curve, char **out);

// Releases a curve handle. Null is ignored.
//
// # Safety
// `curve` must be null or a handle not yet freed.
void eqt_curve_free(struct EqtCurve *curve);

// Ellipse with semi-axes `a`, `b`, rotated by `rotation` about its center.
//
// # Safety
// `out` must be valid for writes.
enum EqtStatus eqt_curve_ellipse(double cx,
                                 double cy,
                                 double a,
                                 double b,
                                 double rotation,
                                 struct EqtCurve **out);

// Rounded Reuleaux polygon of odd order `n`, diagonal `lambda`, rounding
// radius `epsilon`.
//
// # Safety
// `out` must be valid for writes.
enum EqtStatus eqt_curve_reuleaux(int64_t n, double lambda, double epsilon, struct EqtCurve **out);

// Four-arc curve through two circles and two points on their radical axis.
// `circles` holds `cx, cy, r` for each circle; `points` holds `x` then `y`.
//
// # Safety
// `circles` must point to 6 doubles, `points` to 4; `out` must be valid for
// writes.
enum EqtStatus eqt_curve_four_arc(const double *circles,
                                  const double *points,
                                  struct EqtCurve **out);

// Rounded Reuleaux triangle of constant hyperbolic width in the upper
// half-plane, centered at `(0, 1)`.
//
// # Safety
// `out` must be valid for writes.
enum EqtStatus eqt_curve_hyperbolic_reuleaux(double circumradius,
                                             double epsilon,
                                             struct EqtCurve **out);

// Both tangencies from the exterior point `(x, y)` into `out[0..2]`.
//
// # Safety
// `curve` must be a live handle; `out` must point to two writable
// [`EqtTangent`]s.
enum EqtStatus eqt_curve_tangents(const struct EqtCurve *curve,
                                  double x,
                                  double y,
                                  struct EqtTangent *out);

// Largest `|L1 − L2|` over `n` points given as interleaved `x, y` pairs.
//
// # Safety
// `curve` must be a live handle; `xy` must point to `2n` doubles; `out` must
// be valid for writes.
enum EqtStatus eqt_curve_equitangent_residual(const struct EqtCurve *curve,
                                              const double *xy,
                                              size_t n,
                                              double *out);

// Smallest and largest Euclidean width over `directions` sampled angles.
//
// # Safety
// `curve` must be a live handle; `min` and `max` must be valid for writes.
enum EqtStatus eqt_curve_width_range(const struct EqtCurve *curve,
                                     size_t directions,
                                     double *min,
                                     double *max);

// Largest `|L1 − L2|` for tangents from the points `(xs[i], 0)` of the
// boundary line, measured in the upper half-plane metric.
//
// # Safety
// `curve` must be a live handle; `xs` must point to `n` doubles; `out` must
// be valid for writes.
enum EqtStatus eqt_curve_boundary_equitangent_residual(const struct EqtCurve *curve,
                                                       const double *xs,
                                                       size_t n,
                                                       double *out);

// Distance between two points of the upper half-plane.
//
// # Safety
// `out` must be valid for writes.
enum EqtStatus eqt_hyp_distance(double px, double py, double qx, double qy, double *out);

// Surface by name (`sphere`, `spheroid`, `ellipsoid`, `quartic`) and
// parameters; `n_params == 0` selects the defaults.
//
// # Safety
// `name` must be a NUL-terminated string, `params` must point to `n_params`
// doubles, and `out` must be valid for writes.
enum EqtStatus eqt_surface_new(const char *name,
                               const double *params,
                               size_t n_params,
                               struct EqtSurface **out);

// Releases a surface handle. Null is ignored.
//
// # Safety
// `surface` must be null or a handle not yet freed.
void eqt_surface_free(struct EqtSurface *surface);

// Spread of tangent-segment lengths from `(x, y, z)` over `samples` contact
// points.
//
// # Safety
// `surface` must be a live handle; `out` must be valid for writes.
enum EqtStatus eqt_surface_tangent_length_spread(const struct EqtSurface *surface,
                                                 double x,
                                                 double y,
                                                 double z,
                                                 size_t samples,
                                                 struct EqtLengthSpread *out);

// Principal curvatures `k1 >= k2` at a surface point.
//
// # Safety
// `surface` must be a live handle; `k1` and `k2` must be valid for writes.
enum EqtStatus eqt_surface_principal_curvatures(const struct EqtSurface *surface,
                                                double x,
                                                double y,
                                                double z,
                                                double *k1,
                                                double *k2);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUITANGENT_H */
