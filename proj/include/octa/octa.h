/*
 * C interface to the octahedra moduli library.
 *
 * Every function returns an octa_status; OCTA_OK is zero. Outputs are written
 * only on success. On failure octa_last_error_message() describes the error
 * for the calling thread until the next call into the library.
 *
 * Chart points are double[4] in (a, b, c, d) order; 3-space vertices are
 * double[9] holding v1, v2, v3 consecutively. Walls are 0..3 for
 * {a=0}, {b=0}, {c=0}, {d=0}.
 */
#ifndef OCTA_OCTA_H
#define OCTA_OCTA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OCTA_BUILDING_LIBRARY)
#    define OCTA_API __declspec(dllexport)
#  else
#    define OCTA_API __declspec(dllimport)
#  endif
#else
#  define OCTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum octa_status {
  OCTA_OK = 0,
  OCTA_ERR_NON_POSITIVE_DEFICIT,
  OCTA_ERR_SUM_NOT_TWO_PI,
  OCTA_ERR_DEGENERATE_FORM,
  OCTA_ERR_NON_POSITIVE_CHART,
  OCTA_ERR_GLUING_INCONSISTENT,
  OCTA_ERR_UNKNOWN_VERTEX,
  OCTA_ERR_DEGENERATE_VERTICES,
  OCTA_ERR_NOT_OCTAHEDRAL_HULL,
  OCTA_ERR_BOUNDS_VIOLATED,
  OCTA_ERR_ZERO_AREA,
  OCTA_ERR_MIXED_CONTEXT,
  OCTA_ERR_NOT_TIMELIKE_SEPARATED,
  OCTA_ERR_SAME_WALL,
  OCTA_ERR_NEGATIVE_COORDINATE,
  OCTA_ERR_NON_POSITIVE_LEADING_COORDINATE,
  OCTA_ERR_BAD_SAMPLE_COUNT,
  OCTA_ERR_BAD_TRUNCATION,
  OCTA_ERR_INVALID_ARGUMENT, /* null pointer, index out of range */
  OCTA_ERR_BUFFER_TOO_SMALL,
  OCTA_ERR_INTERNAL
} octa_status;

/* Machine-readable code such as "SumNotTwoPi". Never NULL. */
OCTA_API const char* octa_status_name(octa_status status);
/* 1 if the status reports bad caller input, 0 for OK or numeric/internal failures. */
OCTA_API int octa_status_is_validation_error(octa_status status);
OCTA_API const char* octa_last_error_message(void);
OCTA_API const char* octa_version(void);

/* ---- deficits and the area form ---------------------------------------- */

typedef struct octa_deficits octa_deficits;

OCTA_API octa_status octa_deficits_create(double d1, double d2, double d3, octa_deficits** out);
OCTA_API void octa_deficits_destroy(octa_deficits* d);
/* Renormalized deficits (sum exactly 2pi up to rounding). */
OCTA_API octa_status octa_deficits_values(const octa_deficits* d, double out[3]);
OCTA_API octa_status octa_trig_pack(const octa_deficits* d, double sines[3], double cosines[3]);
/* Row-major 4x4. */
OCTA_API octa_status octa_gram_matrix(const octa_deficits* d, double out[16]);
OCTA_API octa_status octa_spectrum(const octa_deficits* d, double out[4]);
OCTA_API octa_status octa_signature(const octa_deficits* d, int* positive, int* negative);
OCTA_API octa_status octa_lorentz_product(const octa_deficits* d, const double p[4],
                                          const double q[4], double* out);
OCTA_API octa_status octa_area(const octa_deficits* d, const double p[4], double* out);

/* ---- embedded octahedra ------------------------------------------------- */

typedef struct octa_octahedron octa_octahedron;

OCTA_API octa_status octa_octahedron_create(const double vertices[9], octa_octahedron** out);
OCTA_API void octa_octahedron_destroy(octa_octahedron* e);
OCTA_API octa_status octa_octahedron_deficits(const octa_octahedron* e, double out[3]);
/* omega for faces T1..T4, three per face in face vertex order:
 * T1=(v1,v2',v3'), T2=(v1,v2,v3'), T3=(v1,v2,v3), T4=(v1,v2',v3). */
OCTA_API octa_status octa_octahedron_face_angles(const octa_octahedron* e, double out[12]);
OCTA_API octa_status octa_octahedron_alpha_beta(const octa_octahedron* e, double* alpha, double* beta);
OCTA_API octa_status octa_octahedron_chart(const octa_octahedron* e, double out[4]);
OCTA_API octa_status octa_octahedron_surface_area(const octa_octahedron* e, double* out);

/* ---- gluing complex ----------------------------------------------------- */

typedef struct octa_complex octa_complex;

typedef struct octa_face_info {
  char label[8];          /* "P1".."P6'" */
  char corners[4][8];     /* oriented corner cycle; corner 0 carries corner_angle */
  double side_u;          /* edges 0 and 2 */
  double side_v;          /* edges 1 and 3 */
  int side_coords[2];     /* 0..3 = a..d */
  double corner_angle;
  int deficit_index;      /* 0..2 */
} octa_face_info;

OCTA_API octa_status octa_complex_build(const octa_deficits* d, const double chart[4],
                                        octa_complex** out);
OCTA_API void octa_complex_destroy(octa_complex* g);
OCTA_API octa_status octa_complex_counts(const octa_complex* g, int* vertices, int* edges,
                                         int* faces);
OCTA_API octa_status octa_complex_euler_characteristic(const octa_complex* g, int* out);
OCTA_API octa_status octa_complex_face(const octa_complex* g, int index, octa_face_info* out);
/* Vertex names: "v1".."v3'", "O1".."O4'". */
OCTA_API octa_status octa_complex_cone_angle(const octa_complex* g, const char* vertex, double* out);
OCTA_API octa_status octa_complex_antipodal_automorphism(const octa_complex* g, int* out);
/* Boundary O1, v1, O3, v3, O1', v1', O3', v2' as x,y pairs; interior O4, O2'. */
OCTA_API octa_status octa_develop_octagon(const octa_deficits* d, const double chart[4],
                                          double boundary[16], double interior[4]);

typedef struct octa_svg_options {
  double width;   /* <= 0 selects the default 800 */
  double margin;  /* < 0 selects the default 24 */
  int labels;
} octa_svg_options;

/* Writes the NUL-terminated SVG into buffer if capacity suffices; *required
 * always receives the needed size including the terminator. options may be NULL. */
OCTA_API octa_status octa_svg_net(const octa_deficits* d, const double chart[4],
                                  const octa_svg_options* options, char* buffer, size_t capacity,
                                  size_t* required);

/* ---- moduli space ------------------------------------------------------- */

typedef enum octa_boundary_kind {
  OCTA_INTERIOR = 0,
  OCTA_HEXAGON_PILLOWCASE,
  OCTA_PARALLELOGRAM_PILLOWCASE,
  OCTA_IDEAL_OR_INVALID
} octa_boundary_kind;

typedef enum octa_group_kind { OCTA_GROUP_TRIVIAL = 0, OCTA_GROUP_D2, OCTA_GROUP_S4 } octa_group_kind;

typedef struct octa_symmetry_info {
  octa_group_kind kind;
  int generator_count;
  int generators[3][4]; /* generators[g][i] = image of coordinate i */
} octa_symmetry_info;

OCTA_API octa_status octa_normalize(const octa_deficits* d, const double chart[4], double out[4]);
/* Both points must already have unit area. */
OCTA_API octa_status octa_distance(const octa_deficits* d, const double p[4], const double q[4],
                                   double* out);
OCTA_API octa_status octa_wall_normal(const octa_deficits* d, int wall, double out[4]);
OCTA_API octa_status octa_dihedral_angle(const octa_deficits* d, int wall_i, int wall_j, double* out);
OCTA_API octa_status octa_reflect_wall(const octa_deficits* d, const double p[4], int wall,
                                       double out[4]);
/* Row i is the ideal vertex opposite wall i. */
OCTA_API octa_status octa_ideal_vertices(const octa_deficits* d, double out[16]);
OCTA_API octa_status octa_classify_boundary(const double chart[4], octa_boundary_kind* out);
OCTA_API octa_status octa_symmetry_group(const octa_deficits* d, double tolerance,
                                         octa_symmetry_info* out);
OCTA_API octa_status octa_canonical_form(const octa_deficits* d, double tolerance,
                                         const double chart[4], double out[4]);
OCTA_API octa_status octa_klein_coordinates(const octa_deficits* d, const double p[4], double out[3]);

/* ---- volume ------------------------------------------------------------- */

typedef struct octa_mc_options {
  uint64_t samples;
  uint64_t seed;
  double truncation;
  unsigned workers;
} octa_mc_options;

typedef struct octa_volume_estimate {
  double value;
  double std_error;
  uint64_t samples;
  uint64_t seed;
  double truncation;
  double value_half_truncation;
  double std_error_half_truncation;
} octa_volume_estimate;

OCTA_API double octa_lobachevsky(double x);
OCTA_API octa_status octa_tetrahedron_volume(const octa_deficits* d, double* out);
OCTA_API octa_status octa_monte_carlo_volume(const octa_deficits* d, const octa_mc_options* options,
                                             octa_volume_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* OCTA_OCTA_H */
