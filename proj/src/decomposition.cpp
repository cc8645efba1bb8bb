#include "octa/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "octa/error.hpp"

namespace octa {

namespace {

using V = VertexLabel;

// Unprimed faces, corners[0] at the corner carrying delta_k / 2.
struct FaceTemplate {
  std::array<V, 4> corners;
  std::array<int, 2> side_coords; // chart coordinate of side_u, side_v
  int deficit_index;
};

constexpr int kA = 0, kB = 1, kC = 2, kD = 3;

constexpr std::array<FaceTemplate, 6> kTemplates{{
    {{V::v1, V::O4, V::v3, V::O3}, {kA, kC}, 1},    // P1
    {{V::v1, V::O1, V::v2p, V::O4}, {kD, kA}, 2},   // P2
    {{V::v1p, V::O1p, V::v3, V::O2p}, {kD, kB}, 1}, // P3
    {{V::v1p, V::O2p, V::v2p, V::O3p}, {kB, kC}, 2},// P4
    {{V::v2p, V::O2p, V::v3, V::O4}, {kC, kD}, 0},  // P5
    {{V::v2, V::O3, V::v3, V::O1p}, {kB, kA}, 0},   // P6
}};

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::GluingInconsistent, what);
}

std::pair<V, V> edge_vertices(const ParallelogramSpec& f, int e) {
  return {f.corners[e], f.corners[(e + 1) % 4]};
}

std::string face_edge_name(const ParallelogramSpec& f, int e) {
  const auto [x, y] = edge_vertices(f, e);
  std::ostringstream s;
  s << name(f.label) << ":" << name(x) << "-" << name(y);
  return s.str();
}

// Corner positions of a face in its own frame: corner 0 at the origin,
// edge 0 along +x, counter-clockwise.
std::array<Vec2, 4> local_frame(const ParallelogramSpec& f) {
  const Vec2 x1{f.side_u, 0.0};
  const Vec2 x3 = f.side_v * Vec2{std::cos(f.corner_angle), std::sin(f.corner_angle)};
  return {Vec2{0.0, 0.0}, x1, x1 + x3, x3};
}

// Places face `f` so that its edge `e` lands on the segment from -> to.
std::array<Vec2, 4> place_on_edge(const ParallelogramSpec& f, int e, Vec2 from, Vec2 to) {
  const auto local = local_frame(f);
  const Vec2 p = local[e];
  const Vec2 q = local[(e + 1) % 4];
  const double turn = std::atan2(cross(q - p, to - from), dot(q - p, to - from));
  std::array<Vec2, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = from + rotate(local[i] - p, turn);
  return out;
}

double max_gap(Vec2 a, Vec2 b) { return norm(a - b); }

} // namespace

std::string_view name(FaceLabel f) noexcept {
  static constexpr std::array<std::string_view, kFaceCount> kNames{
      "P1", "P2", "P3", "P4", "P5", "P6", "P1'", "P2'", "P3'", "P4'", "P5'", "P6'"};
  return kNames[static_cast<std::size_t>(f)];
}

double ParallelogramSpec::angle_at(int corner) const {
  return corner % 2 == 0 ? corner_angle : kPi - corner_angle;
}

double ParallelogramSpec::area() const { return side_u * side_v * std::sin(corner_angle); }

ParallelogramFamily parallelogram_family(const ChartPoint& p, const ConeDeficits& d) {
  const Vec4 x = p.coords();
  if (!std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; })) {
    throw Error(ErrorCode::NonPositiveChart, "chart coordinates must all be strictly positive");
  }
  ParallelogramFamily family{};
  for (int i = 0; i < 6; ++i) {
    const FaceTemplate& t = kTemplates[i];
    ParallelogramSpec& f = family[i];
    f.label = static_cast<FaceLabel>(i);
    f.corners = t.corners;
    f.side_coords = t.side_coords;
    f.side_u = x[t.side_coords[0]];
    f.side_v = x[t.side_coords[1]];
    f.deficit_index = t.deficit_index;
    f.corner_angle = d[t.deficit_index] / 2.0;

    // The antipodal map reverses the surface orientation, so the image cycle
    // is traversed backwards from the same starting corner.
    ParallelogramSpec& g = family[i + 6];
    g.label = static_cast<FaceLabel>(i + 6);
    g.corners = {antipode(t.corners[0]), antipode(t.corners[3]), antipode(t.corners[2]),
                 antipode(t.corners[1])};
    g.side_coords = {t.side_coords[1], t.side_coords[0]};
    g.side_u = f.side_v;
    g.side_v = f.side_u;
    g.deficit_index = f.deficit_index;
    g.corner_angle = f.corner_angle;
  }
  return family;
}

std::vector<std::pair<int, int>> GluingComplex::incident_corners(VertexLabel v) const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < kFaceCount; ++f) {
    for (int c = 0; c < 4; ++c) {
      if (faces_[f].corners[c] == v) out.emplace_back(f, c);
    }
  }
  return out;
}

GluingComplex build_gluing(const ParallelogramFamily& family) {
  GluingComplex g;
  g.faces_ = family;

  for (const auto& f : family) {
    if (!(f.side_u > 0.0) || !(f.side_v > 0.0)) {
      throw Error(ErrorCode::NonPositiveChart, "degenerate parallelogram side");
    }
    if (!(f.corner_angle > 0.0) || !(f.corner_angle < kPi)) {
      inconsistent(std::string("corner angle out of range on ") + std::string(name(f.label)));
    }
  }

  // Directed edge (x -> y) to its owner; the partner must run y -> x.
  std::map<std::pair<V, V>, EdgeRef> directed;
  for (int fi = 0; fi < kFaceCount; ++fi) {
    for (int e = 0; e < 4; ++e) {
      const auto key = edge_vertices(family[fi], e);
      if (key.first == key.second) inconsistent("loop edge " + face_edge_name(family[fi], e));
      if (!directed.emplace(key, EdgeRef{fi, e}).second) {
        inconsistent("edge traversed twice in the same direction: " +
                     face_edge_name(family[fi], e));
      }
    }
  }
  for (const auto& [key, ref] : directed) {
    const auto it = directed.find({key.second, key.first});
    if (it == directed.end()) {
      inconsistent("unglued edge " + face_edge_name(family[ref.face], ref.edge));
    }
    const EdgeRef other = it->second;
    if (family[ref.face].edge_length(ref.edge) != family[other.face].edge_length(other.edge)) {
      inconsistent("length mismatch across " + face_edge_name(family[ref.face], ref.edge));
    }
    g.partner_[GluingComplex::index(ref)] = other;
    if (key.first < key.second) g.pairs_.push_back({ref, other});
  }

  std::array<bool, kVertexLabelCount> seen{};
  for (const auto& f : family) {
    for (V v : f.corners) seen[static_cast<std::size_t>(v)] = true;
  }
  g.vertex_count_ = static_cast<int>(std::count(seen.begin(), seen.end(), true));

  if (g.edge_count() != 24 || g.vertex_count() != kVertexLabelCount) {
    inconsistent("complex does not have 14 vertices and 24 edges");
  }
  if (!antipodal_is_automorphism(g)) inconsistent("antipodal map is not an automorphism");
  return g;
}

double cone_angle(const GluingComplex& g, VertexLabel v) {
  double total = 0.0;
  for (const auto& [f, c] : g.incident_corners(v)) total += g.faces()[f].angle_at(c);
  return total;
}

double cone_angle(const GluingComplex& g, std::string_view vertex) {
  const auto v = parse_vertex_label(vertex);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex label '" + std::string(vertex) + "'");
  return cone_angle(g, *v);
}

bool antipodal_is_automorphism(const GluingComplex& g) {
  const auto& faces = g.faces();
  for (int v = 0; v < kVertexLabelCount; ++v) {
    if (antipode(static_cast<V>(v)) == static_cast<V>(v)) return false;
  }
  for (int fi = 0; fi < kFaceCount; ++fi) {
    const int gi = GluingComplex::antipodal_face(fi);
    if (gi == fi) return false;
    const auto& f = faces[fi];
    const auto& h = faces[gi];
    if (h.corner_angle != f.corner_angle || h.deficit_index != f.deficit_index) return false;
    // Corner c of f maps to corner (4 - c) % 4 of its image; edge e of f
    // (c -> c+1) maps to edge (3 - e) of the image, traversed backwards.
    for (int c = 0; c < 4; ++c) {
      if (h.corners[(4 - c) % 4] != antipode(f.corners[c])) return false;
    }
    for (int e = 0; e < 4; ++e) {
      if (h.edge_length(3 - e) != f.edge_length(e)) return false;
      const EdgeRef p = g.partner({fi, e});
      const EdgeRef image_partner = g.partner({gi, 3 - e});
      if (image_partner != EdgeRef{GluingComplex::antipodal_face(p.face), 3 - p.edge}) return false;
      // A fixed edge would join x to x'.
      const auto [x, y] = edge_vertices(f, e);
      if (y == antipode(x)) return false;
    }
  }
  return true;
}

FaceLayout unfold_net(const GluingComplex& g) {
  const auto& faces = g.faces();
  FaceLayout layout{};
  std::array<bool, kFaceCount> placed{};

  auto attach = [&](int child, int parent) {
    for (int e = 0; e < 4; ++e) {
      const EdgeRef p = g.partner({child, e});
      if (p.face != parent || !placed[parent]) continue;
      // Edge e of the child runs opposite to edge p.edge of the parent.
      const Vec2 from = layout[parent][(p.edge + 1) % 4];
      const Vec2 to = layout[parent][p.edge];
      layout[child] = place_on_edge(faces[child], e, from, to);
      placed[child] = true;
      return;
    }
    inconsistent(std::string("no shared edge between ") + std::string(name(faces[child].label)) +
                 " and " + std::string(name(faces[parent].label)));
  };
  auto closure = [&](int f1, int f2) {
    for (int e = 0; e < 4; ++e) {
      const EdgeRef p = g.partner({f1, e});
      if (p.face != f2) continue;
      const double gap = std::max(max_gap(layout[f1][e], layout[f2][(p.edge + 1) % 4]),
                                  max_gap(layout[f1][(e + 1) % 4], layout[f2][p.edge]));
      const double scale = std::max(faces[f1].side_u, faces[f1].side_v);
      if (gap > 1e-9 * scale) {
        inconsistent(std::string("octagon does not close between ") +
                     std::string(name(faces[f1].label)) + " and " +
                     std::string(name(faces[f2].label)));
      }
      return;
    }
    inconsistent("closure faces are not adjacent");
  };

  constexpr int P1 = 0, P2 = 1, P3 = 2, P4 = 3, P5 = 4, P6 = 5;
  auto prime = [](int f) { return f + 6; };

  layout[P1] = local_frame(faces[P1]);
  placed[P1] = true;
  attach(P2, P1);
  attach(P5, P1);
  closure(P2, P5);
  attach(P3, P5);
  attach(P4, P5);
  closure(P3, P4);
  attach(P6, P1);

  attach(prime(P4), P6);
  attach(prime(P5), prime(P4));
  attach(prime(P3), prime(P5));
  attach(prime(P1), prime(P5));
  attach(prime(P2), prime(P1));
  closure(prime(P2), prime(P5));
  closure(prime(P3), prime(P4));
  attach(prime(P6), prime(P1));
  return layout;
}

namespace {

// Position of `v` among the laid-out corners of faces `fs`.
Vec2 find_corner(const GluingComplex& g, const FaceLayout& layout, std::span<const int> fs, V v) {
  for (int f : fs) {
    for (int c = 0; c < 4; ++c) {
      if (g.faces()[f].corners[c] == v) return layout[f][c];
    }
  }
  inconsistent("vertex missing from octagon development");
}

} // namespace

PlanarOctagon develop_octagon(const ChartPoint& p, const ConeDeficits& d) {
  const GluingComplex g = build_gluing(parallelogram_family(p, d));
  const FaceLayout layout = unfold_net(g);
  constexpr std::array<int, 5> kOctagonFaces{0, 1, 2, 3, 4};
  PlanarOctagon oct;
  for (std::size_t i = 0; i < 8; ++i) {
    oct.boundary[i] = find_corner(g, layout, kOctagonFaces, PlanarOctagon::kOrder[i]);
  }
  oct.o4 = find_corner(g, layout, kOctagonFaces, V::O4);
  oct.o2p = find_corner(g, layout, kOctagonFaces, V::O2p);
  return oct;
}

double PlanarOctagon::interior_angle(int i) const {
  const Vec2 prev = boundary[(i + 7) % 8];
  const Vec2 here = boundary[i];
  const Vec2 next = boundary[(i + 1) % 8];
  // Orientation-independent: measure the turn on the side of the enclosed region.
  double signed_area = 0.0;
  for (int k = 0; k < 8; ++k) signed_area += cross(boundary[k], boundary[(k + 1) % 8]);
  const double orient = signed_area > 0.0 ? 1.0 : -1.0;
  const Vec2 u = next - here;
  const Vec2 w = prev - here;
  double angle = std::atan2(orient * cross(u, w), dot(u, w));
  if (angle < 0.0) angle += kTwoPi;
  return angle;
}

double PlanarOctagon::enclosed_area() const {
  double s = 0.0;
  for (int k = 0; k < 8; ++k) s += cross(boundary[k], boundary[(k + 1) % 8]);
  return std::abs(s) / 2.0;
}

bool PlanarOctagon::is_simple() const {
  auto orient = [](Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); };
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if (j == i + 1 || (i == 0 && j == 7)) continue; // adjacent sides
      const Vec2 a = boundary[i], b = boundary[(i + 1) % 8];
      const Vec2 c = boundary[j], e = boundary[(j + 1) % 8];
      const double d1 = orient(a, b, c), d2 = orient(a, b, e);
      const double d3 = orient(c, e, a), d4 = orient(c, e, b);
      if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return false;
    }
  }
  return true;
}

Vec2 PlanarOctagon::at(VertexLabel v) const {
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    if (kOrder[i] == v) return boundary[i];
  }
  if (v == V::O4) return o4;
  if (v == V::O2p) return o2p;
  throw Error(ErrorCode::UnknownVertex, "vertex is not part of the octagon");
}

} // namespace octa
