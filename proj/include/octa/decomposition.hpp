#pragma once

// Abstract cone surface built from deficits and a chart point: the twelve
// parallelograms, their edge identifications, cone angles, and planar
// developments (the octagon made of P1..P5 and the full 12-face net).

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octa/forms.hpp"
#include "octa/labels.hpp"
#include "octa/vec.hpp"

namespace octa {

enum class FaceLabel : std::uint8_t { P1, P2, P3, P4, P5, P6, P1p, P2p, P3p, P4p, P5p, P6p };

inline constexpr int kFaceCount = 12;

std::string_view name(FaceLabel f) noexcept;

/// One parallelogram of the decomposition.
///
/// `corners` is the boundary cycle, oriented consistently over the whole
/// surface. Edge e runs corners[e] -> corners[(e + 1) % 4]; even edges have
/// length side_u, odd edges side_v. The interior angle at corners 0 and 2 is
/// corner_angle = delta_k / 2 (k = deficit_index); at corners 1 and 3 it is
/// pi - corner_angle. Corners 0 and 2 are always octahedron vertices.
struct ParallelogramSpec {
  FaceLabel label{};
  std::array<VertexLabel, 4> corners{};
  double side_u = 0.0;
  double side_v = 0.0;
  /// Chart coordinate (0..3 = a..d) that each of side_u, side_v equals.
  std::array<int, 2> side_coords{};
  double corner_angle = 0.0;
  int deficit_index = 0;

  VertexLabel corner_vertex() const { return corners[0]; }
  double edge_length(int edge) const { return edge % 2 == 0 ? side_u : side_v; }
  int edge_coord(int edge) const { return side_coords[static_cast<std::size_t>(edge % 2)]; }
  double angle_at(int corner) const;
  double area() const;
};

using ParallelogramFamily = std::array<ParallelogramSpec, kFaceCount>;

/// Throws Error{NonPositiveChart} unless every chart coordinate is > 0.
ParallelogramFamily parallelogram_family(const ChartPoint& p, const ConeDeficits& d);

struct EdgeRef {
  int face = 0;
  int edge = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct EdgePair {
  EdgeRef first;
  EdgeRef second;
};

class GluingComplex {
public:
  const ParallelogramFamily& faces() const { return faces_; }
  const std::vector<EdgePair>& edge_pairs() const { return pairs_; }

  int face_count() const { return kFaceCount; }
  int edge_count() const { return static_cast<int>(pairs_.size()); }
  int vertex_count() const { return vertex_count_; }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  /// Edge glued to `e`.
  EdgeRef partner(EdgeRef e) const { return partner_[index(e)]; }

  /// Face index of the antipodal image of face `f`.
  static int antipodal_face(int f) { return (f + 6) % kFaceCount; }

  /// Every (face, corner) incident to the vertex class `v`.
  std::vector<std::pair<int, int>> incident_corners(VertexLabel v) const;

private:
  friend GluingComplex build_gluing(const ParallelogramFamily& family);
  static std::size_t index(EdgeRef e) { return static_cast<std::size_t>(e.face * 4 + e.edge); }

  ParallelogramFamily faces_{};
  std::vector<EdgePair> pairs_;
  std::array<EdgeRef, kFaceCount * 4> partner_{};
  int vertex_count_ = 0;
};

/// Pairs up the 48 face edges and validates the complex (each edge glued to
/// exactly one partner of identical stored length, traversed in the opposite
/// direction; antipodal relabeling is a fixed-point-free automorphism).
/// Throws Error{NonPositiveChart} for degenerate sides and
/// Error{GluingInconsistent} if the combinatorics fail.
GluingComplex build_gluing(const ParallelogramFamily& family);

/// Sum of face corner angles at the vertex class.
double cone_angle(const GluingComplex& g, VertexLabel v);
/// Same, by label name ("v1", "O2'", ...); throws Error{UnknownVertex}.
double cone_angle(const GluingComplex& g, std::string_view vertex);

/// True if X <-> X' maps faces to faces, glued edges to glued edges, preserves
/// lengths and angles exactly, and fixes no face, edge or vertex.
bool antipodal_is_automorphism(const GluingComplex& g);

/// Planar positions of every face corner, laid out edge-to-edge along a fixed
/// spanning tree: the octagon P1..P5 (v1 at the origin, v1 -> O4 along +x),
/// then P6, the antipodal octagon P1'..P5' and P6'. Throws
/// Error{GluingInconsistent} if a closing edge of either octagon misfits.
using FaceLayout = std::array<std::array<Vec2, 4>, kFaceCount>;
FaceLayout unfold_net(const GluingComplex& g);

/// The geodesic octagon O1, v1, O3, v3, O1', v1', O3', v2' developed into the
/// plane, with the two interior points O4 and O2'.
struct PlanarOctagon {
  static constexpr std::array<VertexLabel, 8> kOrder{
      VertexLabel::O1, VertexLabel::v1, VertexLabel::O3, VertexLabel::v3,
      VertexLabel::O1p, VertexLabel::v1p, VertexLabel::O3p, VertexLabel::v2p};

  std::array<Vec2, 8> boundary{};
  Vec2 o4{};
  Vec2 o2p{};

  /// Interior angle at boundary vertex i.
  double interior_angle(int i) const;
  /// Unsigned area enclosed by the boundary.
  double enclosed_area() const;
  bool is_simple() const;
  Vec2 at(VertexLabel v) const;
};

/// Throws Error{NonPositiveChart}.
PlanarOctagon develop_octagon(const ChartPoint& p, const ConeDeficits& d);

struct SvgOptions {
  double width = 800.0; // pixels; height follows the aspect ratio
  double margin = 24.0;
  bool labels = true;
};

/// SVG 1.1 rendering of the 12-face net. Faces are filled by deficit group,
/// edges stroked by chart coordinate. Output is a pure function of the inputs.
std::string svg_net(const ChartPoint& p, const ConeDeficits& d, const SvgOptions& options = {});

} // namespace octa
