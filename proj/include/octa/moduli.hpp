#pragma once

// Hyperboloid-model geometry of the unit-area locus in the positive orthant:
// distance, the four walls {x = 0}, their normals and reflections, dihedral
// angles, ideal vertices, boundary classification, label symmetries, and the
// Klein-model chart used for verification.

#include <array>
#include <string_view>
#include <vector>

#include "octa/forms.hpp"
#include "octa/vec.hpp"

namespace octa {

/// Wall {x = 0} for chart coordinate x; the enumerator value is the
/// coordinate index.
enum class Wall : int { A = 0, B = 1, C = 2, D = 3 };

std::string_view name(Wall w) noexcept;

/// Unit-area chart point together with its deficit context.
struct ModuliPoint {
  ChartPoint coords;
  TrigPack trig;
};

/// p / sqrt(area(p)). Throws Error{ZeroArea} when area(p) <= 0 (three or more
/// vanishing coordinates) and Error{NegativeCoordinate} outside the orthant.
ModuliPoint normalize(const ChartPoint& p, const TrigPack& t);

/// Hyperbolic distance arccosh(B(p, q)), evaluated through the chord p - q. Throws Error{MixedContext} if the
/// points carry different deficits, Error{NotTimelikeSeparated} if
/// B(p, q) < 1 - 1e-9.
double distance(const ModuliPoint& p, const ModuliPoint& q);

struct WallNormal {
  Wall wall;
  Vec4 n;
};

/// Entry 1 at the wall coordinate x, -C_k at every other coordinate u, where
/// S_k is the coefficient of x*u in the area form.
WallNormal wall_normal(Wall w, const TrigPack& t);

/// B(n_i, n_j) in factored form: -2 S1 S2 S3 on the diagonal and
/// 2 S1 S2 S3 C_k off it, k the monomial group of the pair.
double wall_normal_product(Wall wi, Wall wj, const TrigPack& t);

/// Interior dihedral angle between two walls. Throws Error{SameWall}.
double dihedral_angle(Wall wi, Wall wj, const TrigPack& t);

/// Reflection fixing {x = 0}: x -> -x, u -> u + 2 x C_k.
Vec4 reflect_wall(const Vec4& p, Wall w, const TrigPack& t);

/// The null coordinate directions e1..e4, one per ideal vertex of the
/// tetrahedron. Vertex i lies on every wall except {x_i = 0}.
std::array<Vec4, 4> ideal_vertices(const TrigPack& t);

enum class BoundaryKind { interior, hexagon_pillowcase, parallelogram_pillowcase, ideal_or_invalid };
std::string_view name(BoundaryKind k) noexcept;

/// Classifies by the number of vanishing coordinates. Throws
/// Error{NegativeCoordinate}.
BoundaryKind classify_boundary(const ChartPoint& p);

/// A coordinate permutation: image[i] is where coordinate i is sent.
using Permutation = std::array<int, 4>;

inline constexpr Permutation kIdentity{0, 1, 2, 3};

enum class GroupKind { trivial, dihedral_D2, full_S4 };
std::string_view name(GroupKind k) noexcept;

struct SymmetryGroup {
  GroupKind kind = GroupKind::trivial;
  std::vector<Permutation> generators;

  /// All group elements, identity first, in a deterministic order.
  std::vector<Permutation> elements() const;
};

/// Applies a permutation: result[perm[i]] = p[i].
Vec4 permute(const Vec4& p, const Permutation& perm);

/// Coordinate permutations that preserve the area form, decided by which
/// deficits agree within `tol`.
SymmetryGroup symmetry_group(const ConeDeficits& d, double tol = 1e-9);

/// Lexicographically smallest point of the orbit of p under g.
ChartPoint canonical_form(const ChartPoint& p, const SymmetryGroup& g);

/// Orthonormal-frame coefficients (y1, y2, y3, y4) with
/// B(p, p) = y1^2 - y2^2 - y3^2 - y4^2, from the fixed eigenbasis
/// u1 = (1,1,1,1), u2 = (1,-1,-1,1), u3 = (1,-1,1,-1), u4 = (1,1,-1,-1).
std::array<double, 4> lorentz_frame(const Vec4& p, const TrigPack& t);

/// Projective Klein-ball image (y2, y3, y4) / y1 of any future-timelike or
/// null direction. Throws Error{NonPositiveLeadingCoordinate} if y1 <= 0.
Vec3 klein_coordinates(const Vec4& p, const TrigPack& t);
Vec3 klein_coordinates(const ModuliPoint& p);

} // namespace octa
