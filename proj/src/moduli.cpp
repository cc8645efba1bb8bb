#include "octa/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "octa/error.hpp"

namespace octa {

namespace {

constexpr std::array<Vec4, 4> kEigenbasis{{
    {1, 1, 1, 1},
    {1, -1, -1, 1},
    {1, -1, 1, -1},
    {1, 1, -1, -1},
}};

Permutation swap(int i, int j) {
  Permutation p = kIdentity;
  std::swap(p[i], p[j]);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r{};
  for (int i = 0; i < 4; ++i) r[i] = outer[inner[i]];
  return r;
}

} // namespace

std::string_view name(Wall w) noexcept {
  switch (w) {
  case Wall::A: return "a";
  case Wall::B: return "b";
  case Wall::C: return "c";
  case Wall::D: return "d";
  }
  return "?";
}

std::string_view name(BoundaryKind k) noexcept {
  switch (k) {
  case BoundaryKind::interior: return "interior";
  case BoundaryKind::hexagon_pillowcase: return "hexagon_pillowcase";
  case BoundaryKind::parallelogram_pillowcase: return "parallelogram_pillowcase";
  case BoundaryKind::ideal_or_invalid: return "ideal_or_invalid";
  }
  return "?";
}

std::string_view name(GroupKind k) noexcept {
  switch (k) {
  case GroupKind::trivial: return "trivial";
  case GroupKind::dihedral_D2: return "dihedral_D2";
  case GroupKind::full_S4: return "full_S4";
  }
  return "?";
}

ModuliPoint normalize(const ChartPoint& p, const TrigPack& t) {
  const Vec4 v = p.coords();
  if (std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0; })) {
    throw Error(ErrorCode::NegativeCoordinate, "chart point lies outside the positive orthant");
  }
  const double q = area(p, t);
  if (!(q > 0.0)) throw Error(ErrorCode::ZeroArea, "chart point has zero area");
  const double s = 1.0 / std::sqrt(q);
  return {ChartPoint{s * p.a, s * p.b, s * p.c, s * p.d}, t};
}

double distance(const ModuliPoint& p, const ModuliPoint& q) {
  if (!(p.trig == q.trig)) throw Error(ErrorCode::MixedContext, "points use different deficits");
  const Vec4 x = p.coords.coords(), y = q.coords.coords();
  const double b = lorentz_product(x, y, p.trig);
  if (b < 1.0 - 1e-9) {
    throw Error(ErrorCode::NotTimelikeSeparated, "product of unit-area points is below 1");
  }
  // cosh d = 1 - B(x-y, x-y)/2 on the unit sheet; the half-chord form avoids
  // acosh's loss of precision near d = 0.
  const Vec4 delta{x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
  const double chord_sq = -lorentz_product(delta, delta, p.trig);
  return 2.0 * std::asinh(std::sqrt(chord_sq > 0.0 ? chord_sq : 0.0) / 2.0);
}

WallNormal wall_normal(Wall w, const TrigPack& t) {
  const int x = static_cast<int>(w);
  WallNormal out{w, {}};
  for (int u = 0; u < 4; ++u) out.n[u] = (u == x) ? 1.0 : -t.c[monomial_group(x, u)];
  return out;
}

double wall_normal_product(Wall wi, Wall wj, const TrigPack& t) {
  const double scale = 2.0 * t.s[0] * t.s[1] * t.s[2];
  if (wi == wj) return -scale;
  return scale * t.c[monomial_group(static_cast<int>(wi), static_cast<int>(wj))];
}

double dihedral_angle(Wall wi, Wall wj, const TrigPack& t) {
  if (wi == wj) throw Error(ErrorCode::SameWall, "dihedral angle needs two distinct walls");
  // Normals are spacelike (B < 0); their signed "length square" is
  // -sqrt(B(ni,ni) B(nj,nj)), and the product over it is -cos(angle). The
  // pair's Gram determinant is (2 S1 S2 S3 S_k)^2, which gives the sine.
  const double length_sq =
      -std::sqrt(wall_normal_product(wi, wi, t) * wall_normal_product(wj, wj, t));
  const double cosine = -wall_normal_product(wi, wj, t) / length_sq;
  const int k = monomial_group(static_cast<int>(wi), static_cast<int>(wj));
  const double sine = 2.0 * t.s[0] * t.s[1] * t.s[2] * t.s[k] / -length_sq;
  return std::atan2(sine, cosine);
}

Vec4 reflect_wall(const Vec4& p, Wall w, const TrigPack& t) {
  const int x = static_cast<int>(w);
  Vec4 r = p;
  for (int u = 0; u < 4; ++u) {
    r[u] = (u == x) ? -p[x] : p[u] + 2.0 * p[x] * t.c[monomial_group(x, u)];
  }
  return r;
}

std::array<Vec4, 4> ideal_vertices(const TrigPack&) {
  return {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
}

BoundaryKind classify_boundary(const ChartPoint& p) {
  const Vec4 v = p.coords();
  if (std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0; })) {
    throw Error(ErrorCode::NegativeCoordinate, "chart point lies outside the positive orthant");
  }
  switch (std::count(v.begin(), v.end(), 0.0)) {
  case 0: return BoundaryKind::interior;
  case 1: return BoundaryKind::hexagon_pillowcase;
  case 2: return BoundaryKind::parallelogram_pillowcase;
  default: return BoundaryKind::ideal_or_invalid;
  }
}

Vec4 permute(const Vec4& p, const Permutation& perm) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) r[perm[i]] = p[i];
  return r;
}

std::vector<Permutation> SymmetryGroup::elements() const {
  std::set<Permutation> seen{kIdentity};
  std::vector<Permutation> out{kIdentity};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      const Permutation next = compose(g, out[i]);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

SymmetryGroup symmetry_group(const ConeDeficits& d, double tol) {
  const bool eq12 = std::abs(d[0] - d[1]) <= tol;
  const bool eq13 = std::abs(d[0] - d[2]) <= tol;
  const bool eq23 = std::abs(d[1] - d[2]) <= tol;
  if (eq12 && eq13 && eq23) {
    return {GroupKind::full_S4, {swap(0, 1), swap(1, 2), swap(2, 3)}};
  }
  // With two deficits equal, the odd one out is delta_k; the two coordinate
  // transpositions that are the monomials of its S_k group exchange the
  // other two groups and fix this one.
  int odd = -1;
  if (eq23) odd = 0;
  else if (eq13) odd = 1;
  else if (eq12) odd = 2;
  if (odd < 0) return {GroupKind::trivial, {}};
  std::vector<Permutation> gens;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (monomial_group(i, j) == odd) gens.push_back(swap(i, j));
    }
  }
  return {GroupKind::dihedral_D2, gens};
}

ChartPoint canonical_form(const ChartPoint& p, const SymmetryGroup& g) {
  Vec4 best = p.coords();
  for (const auto& perm : g.elements()) best = std::min(best, permute(p.coords(), perm));
  return ChartPoint::from(best);
}

std::array<double, 4> lorentz_frame(const Vec4& p, const TrigPack& t) {
  const auto x = spectrum(t).values();
  std::array<double, 4> y{};
  for (int k = 0; k < 4; ++k) {
    double proj = 0.0;
    for (int i = 0; i < 4; ++i) proj += kEigenbasis[k][i] * p[i];
    y[k] = std::sqrt(std::abs(x[k])) * proj / 2.0;
  }
  return y;
}

Vec3 klein_coordinates(const Vec4& p, const TrigPack& t) {
  const auto y = lorentz_frame(p, t);
  if (!(y[0] > 0.0)) {
    throw Error(ErrorCode::NonPositiveLeadingCoordinate, "point is outside the positive cone");
  }
  return {y[1] / y[0], y[2] / y[0], y[3] / y[0]};
}

Vec3 klein_coordinates(const ModuliPoint& p) { return klein_coordinates(p.coords.coords(), p.trig); }

} // namespace octa
