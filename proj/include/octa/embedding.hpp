#pragma once

// Concrete centrally symmetric octahedra hull(+-v1, +-v2, +-v3): face angles,
// deficits, the angles alpha and beta, the extra points O1 and O3, and the
// chart (a, b, c, d).

#include <array>
#include <cstdint>

#include "octa/forms.hpp"
#include "octa/labels.hpp"
#include "octa/vec.hpp"

namespace octa {

class EmbeddedOctahedron {
public:
  /// Throws Error{DegenerateVertices} if the vectors are (numerically)
  /// dependent, Error{NotOctahedralHull} if some sign-triangle fails to be a
  /// supporting face.
  static EmbeddedOctahedron validate(Vec3 v1, Vec3 v2, Vec3 v3);

  /// Position of an octahedron vertex (v1..v3'); O-points are rejected.
  Vec3 vertex(VertexLabel v) const;
  const std::array<Vec3, 3>& generators() const { return v_; }

  /// Sum of the eight triangle areas.
  double surface_area() const;

private:
  explicit EmbeddedOctahedron(std::array<Vec3, 3> v) : v_(v) {}
  std::array<Vec3, 3> v_;
};

/// The four faces around v1: T1 = (v1, v2', v3'), T2 = (v1, v2, v3'),
/// T3 = (v1, v2, v3), T4 = (v1, v2', v3). Ti' is the antipodal image of Ti.
using FaceVertices = std::array<VertexLabel, 3>;
const std::array<FaceVertices, 4>& faces_at_v1();

/// omega(i, v): angle at vertex v in face Ti (i = 1..4). Angles in the
/// primed faces follow from omega(i', v') = omega(i, v).
struct FaceAngles {
  std::array<std::array<double, 3>, 4> by_slot{}; // [face][position in faces_at_v1()]

  double omega(int face, VertexLabel v) const;
  /// Angle at vertex v in the antipodal face Ti'.
  double omega_antipodal(int face, VertexLabel v) const { return omega(face, antipode(v)); }
};

FaceAngles face_angles(const EmbeddedOctahedron& e);

/// Angle at `at` in the triangle (at, p, q), by the dot-product formula.
double corner_angle(Vec3 at, Vec3 p, Vec3 q);

/// di = 2pi - (sum of the four face angles at vi).
ConeDeficits deficits(const EmbeddedOctahedron& e);

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

/// alpha = (w12' + w42' + w43 + w33 - pi) / 2, beta = (w32 + w22 + w23' + w13' - pi) / 2.
/// Throws Error{BoundsViolated} unless 0 < alpha < w33 and 0 < beta < w32.
AlphaBeta alpha_beta(const FaceAngles& w);

/// Full chart construction with the intermediate points.
struct ChartConstruction {
  AlphaBeta angles;
  Vec3 o1;  // in T1: angle alpha at v2', beta at v3'
  Vec3 o3;  // in T3: angle alpha at v3, beta at v2
  ChartPoint chart;
};

ChartConstruction chart_construction(const EmbeddedOctahedron& e);

/// (|O1 v2'|, |O1 v3'|, |O3 v1|, |O1 v1|).
ChartPoint chart(const EmbeddedOctahedron& e);

/// Seeded random octahedron: vi = Q diag(sigma) ui with Q a random rotation,
/// log-uniform sigma in [0.5, 2] and random unit ui; candidates with a
/// normalized |det| below 0.05 are rejected and redrawn. Same (seed, index)
/// always yields the same octahedron.
EmbeddedOctahedron sample_octahedron(std::uint64_t seed, std::uint64_t index);

} // namespace octa
