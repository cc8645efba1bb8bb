#include "octa/octa.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "octa/decomposition.hpp"
#include "octa/embedding.hpp"
#include "octa/error.hpp"
#include "octa/moduli.hpp"
#include "octa/volume.hpp"

struct octa_deficits {
  octa::ConeDeficits deficits;
  octa::TrigPack trig;
};

struct octa_octahedron {
  octa::EmbeddedOctahedron shape;
};

struct octa_complex {
  octa::GluingComplex complex;
};

namespace {

thread_local std::string g_last_error;

octa_status to_status(octa::ErrorCode code) {
  using octa::ErrorCode;
  switch (code) {
  case ErrorCode::NonPositiveDeficit: return OCTA_ERR_NON_POSITIVE_DEFICIT;
  case ErrorCode::SumNotTwoPi: return OCTA_ERR_SUM_NOT_TWO_PI;
  case ErrorCode::DegenerateForm: return OCTA_ERR_DEGENERATE_FORM;
  case ErrorCode::NonPositiveChart: return OCTA_ERR_NON_POSITIVE_CHART;
  case ErrorCode::GluingInconsistent: return OCTA_ERR_GLUING_INCONSISTENT;
  case ErrorCode::UnknownVertex: return OCTA_ERR_UNKNOWN_VERTEX;
  case ErrorCode::DegenerateVertices: return OCTA_ERR_DEGENERATE_VERTICES;
  case ErrorCode::NotOctahedralHull: return OCTA_ERR_NOT_OCTAHEDRAL_HULL;
  case ErrorCode::BoundsViolated: return OCTA_ERR_BOUNDS_VIOLATED;
  case ErrorCode::ZeroArea: return OCTA_ERR_ZERO_AREA;
  case ErrorCode::MixedContext: return OCTA_ERR_MIXED_CONTEXT;
  case ErrorCode::NotTimelikeSeparated: return OCTA_ERR_NOT_TIMELIKE_SEPARATED;
  case ErrorCode::SameWall: return OCTA_ERR_SAME_WALL;
  case ErrorCode::NegativeCoordinate: return OCTA_ERR_NEGATIVE_COORDINATE;
  case ErrorCode::NonPositiveLeadingCoordinate: return OCTA_ERR_NON_POSITIVE_LEADING_COORDINATE;
  case ErrorCode::BadSampleCount: return OCTA_ERR_BAD_SAMPLE_COUNT;
  case ErrorCode::BadTruncation: return OCTA_ERR_BAD_TRUNCATION;
  }
  return OCTA_ERR_INTERNAL;
}

octa_status fail(octa_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

// Runs `body`, translating exceptions to status codes.
template <class F>
octa_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return OCTA_OK;
  } catch (const octa::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(OCTA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(OCTA_ERR_INTERNAL, "unknown failure");
  }
}

#define OCTA_REQUIRE(cond)                                                                    \
  do {                                                                                        \
    if (!(cond)) return fail(OCTA_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);          \
  } while (0)

octa::Vec4 vec4(const double p[4]) { return {p[0], p[1], p[2], p[3]}; }
octa::ChartPoint chart_of(const double p[4]) { return octa::ChartPoint::from(vec4(p)); }
void store(const octa::Vec4& v, double out[4]) { std::copy(v.begin(), v.end(), out); }

std::optional<octa::Wall> wall_of(int w) {
  if (w < 0 || w > 3) return std::nullopt;
  return static_cast<octa::Wall>(w);
}

void copy_name(std::string_view name, char (&out)[8]) {
  const std::size_t n = std::min(name.size(), sizeof(out) - 1);
  std::memcpy(out, name.data(), n);
  out[n] = '\0';
}

} // namespace

extern "C" {

const char* octa_status_name(octa_status status) {
  switch (status) {
  case OCTA_OK: return "Ok";
  case OCTA_ERR_INVALID_ARGUMENT: return "InvalidArgument";
  case OCTA_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
  case OCTA_ERR_INTERNAL: return "Internal";
  default: break;
  }
  for (int c = 0; c <= static_cast<int>(octa::ErrorCode::BadTruncation); ++c) {
    const auto code = static_cast<octa::ErrorCode>(c);
    if (to_status(code) == status) return octa::to_string(code).data();
  }
  return "Unknown";
}

int octa_status_is_validation_error(octa_status status) {
  switch (status) {
  case OCTA_OK:
  case OCTA_ERR_INTERNAL:
    return 0;
  case OCTA_ERR_INVALID_ARGUMENT:
  case OCTA_ERR_BUFFER_TOO_SMALL:
    return 1;
  default: break;
  }
  for (int c = 0; c <= static_cast<int>(octa::ErrorCode::BadTruncation); ++c) {
    const auto code = static_cast<octa::ErrorCode>(c);
    if (to_status(code) == status) return octa::is_validation_error(code) ? 1 : 0;
  }
  return 0;
}

const char* octa_last_error_message(void) { return g_last_error.c_str(); }

const char* octa_version(void) { return "1.0.0"; }

// ---- deficits and the area form -------------------------------------------

octa_status octa_deficits_create(double d1, double d2, double d3, octa_deficits** out) {
  OCTA_REQUIRE(out);
  return guarded([&] {
    const auto d = octa::ConeDeficits::make(d1, d2, d3);
    *out = new octa_deficits{d, octa::trig_pack(d)};
  });
}

void octa_deficits_destroy(octa_deficits* d) { delete d; }

octa_status octa_deficits_values(const octa_deficits* d, double out[3]) {
  OCTA_REQUIRE(d && out);
  std::copy(d->deficits.values().begin(), d->deficits.values().end(), out);
  return OCTA_OK;
}

octa_status octa_trig_pack(const octa_deficits* d, double sines[3], double cosines[3]) {
  OCTA_REQUIRE(d && sines && cosines);
  std::copy(d->trig.s.begin(), d->trig.s.end(), sines);
  std::copy(d->trig.c.begin(), d->trig.c.end(), cosines);
  return OCTA_OK;
}

octa_status octa_gram_matrix(const octa_deficits* d, double out[16]) {
  OCTA_REQUIRE(d && out);
  const auto m = octa::gram_matrix(d->trig);
  for (int i = 0; i < 4; ++i) std::copy(m[i].begin(), m[i].end(), out + 4 * i);
  return OCTA_OK;
}

octa_status octa_spectrum(const octa_deficits* d, double out[4]) {
  OCTA_REQUIRE(d && out);
  store(octa::spectrum(d->trig).values(), out);
  return OCTA_OK;
}

octa_status octa_signature(const octa_deficits* d, int* positive, int* negative) {
  OCTA_REQUIRE(d && positive && negative);
  return guarded([&] {
    const auto s = octa::signature(d->trig);
    *positive = s.positive;
    *negative = s.negative;
  });
}

octa_status octa_lorentz_product(const octa_deficits* d, const double p[4], const double q[4],
                                 double* out) {
  OCTA_REQUIRE(d && p && q && out);
  *out = octa::lorentz_product(vec4(p), vec4(q), d->trig);
  return OCTA_OK;
}

octa_status octa_area(const octa_deficits* d, const double p[4], double* out) {
  OCTA_REQUIRE(d && p && out);
  *out = octa::area(chart_of(p), d->trig);
  return OCTA_OK;
}

// ---- embedded octahedra ---------------------------------------------------

octa_status octa_octahedron_create(const double v[9], octa_octahedron** out) {
  OCTA_REQUIRE(v && out);
  return guarded([&] {
    auto e = octa::EmbeddedOctahedron::validate({v[0], v[1], v[2]}, {v[3], v[4], v[5]},
                                                {v[6], v[7], v[8]});
    *out = new octa_octahedron{e};
  });
}

void octa_octahedron_destroy(octa_octahedron* e) { delete e; }

octa_status octa_octahedron_deficits(const octa_octahedron* e, double out[3]) {
  OCTA_REQUIRE(e && out);
  return guarded([&] {
    const auto d = octa::deficits(e->shape);
    std::copy(d.values().begin(), d.values().end(), out);
  });
}

octa_status octa_octahedron_face_angles(const octa_octahedron* e, double out[12]) {
  OCTA_REQUIRE(e && out);
  const auto w = octa::face_angles(e->shape);
  for (int i = 0; i < 4; ++i) std::copy(w.by_slot[i].begin(), w.by_slot[i].end(), out + 3 * i);
  return OCTA_OK;
}

octa_status octa_octahedron_alpha_beta(const octa_octahedron* e, double* alpha, double* beta) {
  OCTA_REQUIRE(e && alpha && beta);
  return guarded([&] {
    const auto ab = octa::alpha_beta(octa::face_angles(e->shape));
    *alpha = ab.alpha;
    *beta = ab.beta;
  });
}

octa_status octa_octahedron_chart(const octa_octahedron* e, double out[4]) {
  OCTA_REQUIRE(e && out);
  return guarded([&] { store(octa::chart(e->shape).coords(), out); });
}

octa_status octa_octahedron_surface_area(const octa_octahedron* e, double* out) {
  OCTA_REQUIRE(e && out);
  *out = e->shape.surface_area();
  return OCTA_OK;
}

// ---- gluing complex -------------------------------------------------------

octa_status octa_complex_build(const octa_deficits* d, const double chart[4], octa_complex** out) {
  OCTA_REQUIRE(d && chart && out);
  return guarded([&] {
    auto g = octa::build_gluing(octa::parallelogram_family(chart_of(chart), d->deficits));
    *out = new octa_complex{std::move(g)};
  });
}

void octa_complex_destroy(octa_complex* g) { delete g; }

octa_status octa_complex_counts(const octa_complex* g, int* vertices, int* edges, int* faces) {
  OCTA_REQUIRE(g && vertices && edges && faces);
  *vertices = g->complex.vertex_count();
  *edges = g->complex.edge_count();
  *faces = g->complex.face_count();
  return OCTA_OK;
}

octa_status octa_complex_euler_characteristic(const octa_complex* g, int* out) {
  OCTA_REQUIRE(g && out);
  *out = g->complex.euler_characteristic();
  return OCTA_OK;
}

octa_status octa_complex_face(const octa_complex* g, int index, octa_face_info* out) {
  OCTA_REQUIRE(g && out && index >= 0 && index < octa::kFaceCount);
  const auto& f = g->complex.faces()[static_cast<std::size_t>(index)];
  copy_name(octa::name(f.label), out->label);
  for (int c = 0; c < 4; ++c) copy_name(octa::name(f.corners[c]), out->corners[c]);
  out->side_u = f.side_u;
  out->side_v = f.side_v;
  out->side_coords[0] = f.side_coords[0];
  out->side_coords[1] = f.side_coords[1];
  out->corner_angle = f.corner_angle;
  out->deficit_index = f.deficit_index;
  return OCTA_OK;
}

octa_status octa_complex_cone_angle(const octa_complex* g, const char* vertex, double* out) {
  OCTA_REQUIRE(g && vertex && out);
  return guarded([&] { *out = octa::cone_angle(g->complex, std::string_view(vertex)); });
}

octa_status octa_complex_antipodal_automorphism(const octa_complex* g, int* out) {
  OCTA_REQUIRE(g && out);
  *out = octa::antipodal_is_automorphism(g->complex) ? 1 : 0;
  return OCTA_OK;
}

octa_status octa_develop_octagon(const octa_deficits* d, const double chart[4], double boundary[16],
                                 double interior[4]) {
  OCTA_REQUIRE(d && chart && boundary && interior);
  return guarded([&] {
    const auto oct = octa::develop_octagon(chart_of(chart), d->deficits);
    for (int i = 0; i < 8; ++i) {
      boundary[2 * i] = oct.boundary[i].x;
      boundary[2 * i + 1] = oct.boundary[i].y;
    }
    interior[0] = oct.o4.x;
    interior[1] = oct.o4.y;
    interior[2] = oct.o2p.x;
    interior[3] = oct.o2p.y;
  });
}

octa_status octa_svg_net(const octa_deficits* d, const double chart[4],
                         const octa_svg_options* options, char* buffer, size_t capacity,
                         size_t* required) {
  OCTA_REQUIRE(d && chart && required);
  OCTA_REQUIRE(buffer || capacity == 0);
  std::string svg;
  const octa_status s = guarded([&] {
    octa::SvgOptions opts;
    if (options) {
      if (options->width > 0.0) opts.width = options->width;
      if (options->margin >= 0.0) opts.margin = options->margin;
      opts.labels = options->labels != 0;
    }
    svg = octa::svg_net(chart_of(chart), d->deficits, opts);
  });
  if (s != OCTA_OK) return s;
  *required = svg.size() + 1;
  if (capacity < svg.size() + 1) return fail(OCTA_ERR_BUFFER_TOO_SMALL, "SVG buffer too small");
  std::memcpy(buffer, svg.c_str(), svg.size() + 1);
  return OCTA_OK;
}

// ---- moduli space ---------------------------------------------------------

octa_status octa_normalize(const octa_deficits* d, const double chart[4], double out[4]) {
  OCTA_REQUIRE(d && chart && out);
  return guarded([&] { store(octa::normalize(chart_of(chart), d->trig).coords.coords(), out); });
}

octa_status octa_distance(const octa_deficits* d, const double p[4], const double q[4], double* out) {
  OCTA_REQUIRE(d && p && q && out);
  for (const double* x : {p, q}) {
    if (!(std::abs(octa::area(chart_of(x), d->trig) - 1.0) <= 1e-9)) {
      return fail(OCTA_ERR_INVALID_ARGUMENT, "distance needs unit-area points");
    }
  }
  return guarded([&] {
    *out = octa::distance({chart_of(p), d->trig}, {chart_of(q), d->trig});
  });
}

octa_status octa_wall_normal(const octa_deficits* d, int wall, double out[4]) {
  const auto w = wall_of(wall);
  OCTA_REQUIRE(d && out && w);
  store(octa::wall_normal(*w, d->trig).n, out);
  return OCTA_OK;
}

octa_status octa_dihedral_angle(const octa_deficits* d, int wall_i, int wall_j, double* out) {
  const auto wi = wall_of(wall_i), wj = wall_of(wall_j);
  OCTA_REQUIRE(d && out && wi && wj);
  return guarded([&] { *out = octa::dihedral_angle(*wi, *wj, d->trig); });
}

octa_status octa_reflect_wall(const octa_deficits* d, const double p[4], int wall, double out[4]) {
  const auto w = wall_of(wall);
  OCTA_REQUIRE(d && p && out && w);
  store(octa::reflect_wall(vec4(p), *w, d->trig), out);
  return OCTA_OK;
}

octa_status octa_ideal_vertices(const octa_deficits* d, double out[16]) {
  OCTA_REQUIRE(d && out);
  const auto ideal = octa::ideal_vertices(d->trig);
  for (int i = 0; i < 4; ++i) store(ideal[i], out + 4 * i);
  return OCTA_OK;
}

octa_status octa_classify_boundary(const double chart[4], octa_boundary_kind* out) {
  OCTA_REQUIRE(chart && out);
  return guarded([&] {
    *out = static_cast<octa_boundary_kind>(octa::classify_boundary(chart_of(chart)));
  });
}

octa_status octa_symmetry_group(const octa_deficits* d, double tolerance, octa_symmetry_info* out) {
  OCTA_REQUIRE(d && out && tolerance >= 0.0);
  const auto g = octa::symmetry_group(d->deficits, tolerance);
  out->kind = static_cast<octa_group_kind>(g.kind);
  out->generator_count = static_cast<int>(g.generators.size());
  for (std::size_t k = 0; k < g.generators.size() && k < 3; ++k) {
    for (int i = 0; i < 4; ++i) out->generators[k][i] = g.generators[k][i];
  }
  return OCTA_OK;
}

octa_status octa_canonical_form(const octa_deficits* d, double tolerance, const double chart[4],
                                double out[4]) {
  OCTA_REQUIRE(d && chart && out && tolerance >= 0.0);
  const auto g = octa::symmetry_group(d->deficits, tolerance);
  store(octa::canonical_form(chart_of(chart), g).coords(), out);
  return OCTA_OK;
}

octa_status octa_klein_coordinates(const octa_deficits* d, const double p[4], double out[3]) {
  OCTA_REQUIRE(d && p && out);
  return guarded([&] {
    const auto k = octa::klein_coordinates(vec4(p), d->trig);
    out[0] = k.x;
    out[1] = k.y;
    out[2] = k.z;
  });
}

// ---- volume ---------------------------------------------------------------

double octa_lobachevsky(double x) { return octa::lobachevsky(x); }

octa_status octa_tetrahedron_volume(const octa_deficits* d, double* out) {
  OCTA_REQUIRE(d && out);
  *out = octa::tetrahedron_volume(d->deficits);
  return OCTA_OK;
}

octa_status octa_monte_carlo_volume(const octa_deficits* d, const octa_mc_options* options,
                                    octa_volume_estimate* out) {
  OCTA_REQUIRE(d && options && out);
  return guarded([&] {
    const auto est = octa::monte_carlo_volume(
        d->deficits, {options->samples, options->seed, options->truncation, options->workers});
    *out = {est.value,      est.std_error,           est.samples,
            est.seed,       est.truncation,          est.value_half_truncation,
            est.std_error_half_truncation};
  });
}

} // extern "C"
