#ifndef TRIMODULI_H
#define TRIMODULI_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdbool.h>
#include <stdint.h>

// Result code of every fallible call. `TM_STATUS_OK` is zero.
typedef enum TmStatus {
  TM_STATUS_OK = 0,
  TM_STATUS_NULL_POINTER = 1,
  TM_STATUS_INVALID_TOLERANCE = 2,
  TM_STATUS_NON_POSITIVE_SIDE = 3,
  TM_STATUS_DEGENERATE_TRIANGLE = 4,
  TM_STATUS_NON_POSITIVE_ANGLE = 5,
  TM_STATUS_ANGLE_SUM = 6,
  TM_STATUS_OUT_OF_REGION = 7,
  TM_STATUS_OUT_OF_SIGMA = 8,
  TM_STATUS_OUT_OF_RANGE = 9,
  TM_STATUS_INVALID_ARGUMENT = 10,
  TM_STATUS_INVALID_SPEC = 11,
  TM_STATUS_INTERNAL = 12,
} TmStatus;

typedef enum TmAngleKind {
  TM_ANGLE_KIND_ACUTE = 0,
  TM_ANGLE_KIND_RIGHT = 1,
  TM_ANGLE_KIND_OBTUSE = 2,
} TmAngleKind;

typedef enum TmSideKind {
  TM_SIDE_KIND_EQUILATERAL = 0,
  // Isosceles with the two equal sides longer than the third.
  TM_SIDE_KIND_ISOSCELES_LEGS_LONGER = 1,
  // Isosceles with the two equal sides shorter than the third.
  TM_SIDE_KIND_ISOSCELES_LEGS_SHORTER = 2,
  TM_SIDE_KIND_SCALENE = 3,
} TmSideKind;

typedef enum TmLocus2 {
  TM_LOCUS2_INTERIOR_ACUTE = 0,
  TM_LOCUS2_INTERIOR_OBTUSE = 1,
  TM_LOCUS2_ARC_BD = 2,
  TM_LOCUS2_SEGMENT_BC = 3,
  TM_LOCUS2_SEGMENT_CD = 4,
  TM_LOCUS2_SEGMENT_DE = 5,
  TM_LOCUS2_POINT_C = 6,
  TM_LOCUS2_POINT_D = 7,
} TmLocus2;

typedef enum TmLocus3 {
  TM_LOCUS3_CENTROID = 0,
  TM_LOCUS3_P_PRIME = 1,
  TM_LOCUS3_Q_PRIME = 2,
  TM_LOCUS3_R_PRIME = 3,
  TM_LOCUS3_EDGE_PQ = 4,
  TM_LOCUS3_EDGE_PR = 5,
  TM_LOCUS3_EDGE_QR = 6,
  TM_LOCUS3_INTERIOR_PQR = 7,
  TM_LOCUS3_CORNER_APQ = 8,
  TM_LOCUS3_CORNER_CPR = 9,
  TM_LOCUS3_CORNER_BQR = 10,
} TmLocus3;

typedef enum TmRegion {
  TM_REGION_TOTAL = 0,
  TM_REGION_ACUTE = 1,
  TM_REGION_OBTUSE = 2,
  TM_REGION_RIGHT = 3,
} TmRegion;

typedef enum TmInput {
  TM_INPUT_SIDES = 0,
  TM_INPUT_ANGLES_RADIANS = 1,
  TM_INPUT_ANGLES_DEGREES = 2,
} TmInput;

typedef enum TmChart {
  TM_CHART_SIDE_RATIO = 0,
  TM_CHART_ANGLE_SIGMA = 1,
} TmChart;

typedef enum TmProjection {
  TM_PROJECTION_BARYCENTRIC = 0,
  TM_PROJECTION_OBLIQUE = 1,
} TmProjection;

// Opaque Monte Carlo report.
typedef struct TmReport TmReport;

typedef struct TmTolerance {
  // Relative band for the right-angle and equal-side decisions.
  double eps_class;
  // Absolute slack for region membership.
  double eps_geom;
} TmTolerance;

typedef struct TmShapeClass {
  enum TmAngleKind angle_kind;
  enum TmSideKind side_kind;
} TmShapeClass;

// A point of the side-ratio chart with its classification.
typedef struct TmChart2 {
  double x;
  double y;
  enum TmLocus2 locus;
  struct TmShapeClass shape;
} TmChart2;

// A point of the angle plane with its classification.
typedef struct TmChart3 {
  double x;
  double y;
  double z;
  enum TmLocus3 locus;
  struct TmShapeClass shape;
} TmChart3;

typedef struct TmPoint3 {
  double x;
  double y;
  double z;
} TmPoint3;

typedef struct TmClassCounts {
  uint64_t acute;
  uint64_t right;
  uint64_t obtuse;
} TmClassCounts;

typedef struct TmClassFractions {
  double acute;
  double right;
  double obtuse;
} TmClassFractions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *tm_version(void);

struct TmTolerance tm_tolerance_default(void);

// Classifies a triangle given by three side lengths in any order.
enum TmStatus tm_classify_sides(double a,
                                double b,
                                double c,
                                const struct TmTolerance *tol,
                                struct TmShapeClass *out);

// Classifies a triangle given by three angles in radians summing to pi.
enum TmStatus tm_classify_angles(double x,
                                 double y,
                                 double z,
                                 const struct TmTolerance *tol,
                                 struct TmShapeClass *out);

// Side-ratio chart image `(a/c, b/c)` of a triangle given by its sides.
enum TmStatus tm_chart2_of_sides(double a,
                                 double b,
                                 double c,
                                 const struct TmTolerance *tol,
                                 struct TmChart2 *out);

// Angle-plane image (ascending angles) of a triangle given by its sides.
enum TmStatus tm_chart3_of_sides(double a,
                                 double b,
                                 double c,
                                 const struct TmTolerance *tol,
                                 struct TmChart3 *out);

// Angle-plane image (ascending angles) of a triangle given by its angles.
enum TmStatus tm_chart3_of_angles(double x,
                                  double y,
                                  double z,
                                  const struct TmTolerance *tol,
                                  struct TmChart3 *out);

// Exact area of a class region of the side-ratio chart.
double tm_region_area2(enum TmRegion region);

// Exact proportion of a class on the angle plane.
double tm_region_proportion3(enum TmAngleKind kind);

// Point at parameter `t` in (0, 1) on the median from the acute-isosceles
// end to the apex vertex.
enum TmStatus tm_median_point(double t, struct TmPoint3 *out);

// Classification document as canonical JSON, identical to the CLI's
// `classify` output. Free the string with [`tm_string_free`].
enum TmStatus tm_classify_json(enum TmInput input,
                               double v0,
                               double v1,
                               double v2,
                               const struct TmTolerance *tol,
                               char **out);

// Monte Carlo estimate of the class proportions. `n` must be positive.
// On success `*out` owns a report to be released with [`tm_report_free`].
enum TmStatus tm_estimate(enum TmChart chart,
                          uint64_t n,
                          uint64_t seed,
                          const struct TmTolerance *tol,
                          struct TmReport **out);

enum TmStatus tm_report_counts(const struct TmReport *report, struct TmClassCounts *out);

enum TmStatus tm_report_fractions(const struct TmReport *report, struct TmClassFractions *out);

// Whether every class fell inside its acceptance band. False for null.
bool tm_report_all_pass(const struct TmReport *report);

// The report as canonical JSON, identical to the CLI's `sample` output.
enum TmStatus tm_report_to_json(const struct TmReport *report, char **out);

// Releases a report. Null is ignored.
void tm_report_free(struct TmReport *report);

// Renders a chart to an SVG string. Free it with [`tm_string_free`].
enum TmStatus tm_render_svg(enum TmChart chart,
                            uint32_t width,
                            uint32_t height,
                            bool shade_regions,
                            enum TmProjection projection,
                            char **out);

// Releases a string returned by this library. Null is ignored.
void tm_string_free(char *s);

// Static, NUL-terminated description of a status code. Never free it.
const char *tm_status_message(enum TmStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIMODULI_H */
