#include "octa/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "octa/error.hpp"

namespace octa {

namespace {

using V = VertexLabel;

constexpr std::array<FaceVertices, 4> kFaces{{
    {V::v1, V::v2p, V::v3p},
    {V::v1, V::v2, V::v3p},
    {V::v1, V::v2, V::v3},
    {V::v1, V::v2p, V::v3},
}};

// Point X with angle `at_p` at P (measured from PQ) and `at_q` at Q, on the
// side of R. Computed in the planar frame of triangle (P, Q, R).
Vec3 angle_point(Vec3 p, Vec3 q, Vec3 r, double at_p, double at_q) {
  const double base = norm(q - p);
  const Vec3 ex = (1.0 / base) * (q - p);
  const Vec3 rr = r - p;
  Vec3 ey = rr - dot(rr, ex) * ex;
  ey = (1.0 / norm(ey)) * ey;
  const double len = base * std::sin(at_q) / std::sin(at_p + at_q);
  return p + (len * std::cos(at_p)) * ex + (len * std::sin(at_p)) * ey;
}

double triangle_area(Vec3 a, Vec3 b, Vec3 c) { return 0.5 * norm(cross(b - a, c - a)); }

} // namespace

EmbeddedOctahedron EmbeddedOctahedron::validate(Vec3 v1, Vec3 v2, Vec3 v3) {
  const double scale = std::max({norm(v1), norm(v2), norm(v3)});
  const double vol = det(v1, v2, v3);
  if (!(scale > 0.0) || !std::isfinite(vol) || std::abs(vol) <= 1e-12 * scale * scale * scale) {
    throw Error(ErrorCode::DegenerateVertices, "vertex vectors are linearly dependent");
  }
  // Face-plane test: the plane n.x = 1 through e1 v1, e2 v2, e3 v3 must leave
  // the origin and the three opposite vertices strictly on the near side.
  for (int mask = 0; mask < 8; ++mask) {
    const Vec3 a = (mask & 1 ? -1.0 : 1.0) * v1;
    const Vec3 b = (mask & 2 ? -1.0 : 1.0) * v2;
    const Vec3 c = (mask & 4 ? -1.0 : 1.0) * v3;
    const double dabc = det(a, b, c);
    // n solves a.n = b.n = c.n = 1 (Cramer's rule).
    const Vec3 n = (1.0 / dabc) * (cross(b, c) + cross(c, a) + cross(a, b));
    for (Vec3 opp : {-a, -b, -c}) {
      if (!(dot(n, opp) < 1.0 - 1e-12)) {
        throw Error(ErrorCode::NotOctahedralHull, "a sign-triangle is not a face of the hull");
      }
    }
  }
  return EmbeddedOctahedron({v1, v2, v3});
}

Vec3 EmbeddedOctahedron::vertex(VertexLabel v) const {
  const int i = static_cast<int>(v);
  if (i >= 6) throw Error(ErrorCode::UnknownVertex, "not an octahedron vertex");
  return i < 3 ? v_[i] : -v_[i - 3];
}

double EmbeddedOctahedron::surface_area() const {
  double total = 0.0;
  for (const auto& f : kFaces) {
    total += triangle_area(vertex(f[0]), vertex(f[1]), vertex(f[2]));
  }
  return 2.0 * total;
}

const std::array<FaceVertices, 4>& faces_at_v1() { return kFaces; }

double corner_angle(Vec3 at, Vec3 p, Vec3 q) {
  const Vec3 u = p - at;
  const Vec3 w = q - at;
  // atan2 form stays accurate for angles near 0 and pi.
  return std::atan2(norm(cross(u, w)), dot(u, w));
}

double FaceAngles::omega(int face, VertexLabel v) const {
  const auto& f = kFaces.at(static_cast<std::size_t>(face - 1));
  for (std::size_t k = 0; k < 3; ++k) {
    if (f[k] == v) return by_slot[static_cast<std::size_t>(face - 1)][k];
  }
  throw Error(ErrorCode::UnknownVertex, "vertex is not a corner of this face");
}

FaceAngles face_angles(const EmbeddedOctahedron& e) {
  FaceAngles w;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& f = kFaces[i];
    for (std::size_t k = 0; k < 3; ++k) {
      w.by_slot[i][k] = corner_angle(e.vertex(f[k]), e.vertex(f[(k + 1) % 3]),
                                     e.vertex(f[(k + 2) % 3]));
    }
  }
  return w;
}

ConeDeficits deficits(const EmbeddedOctahedron& e) {
  const FaceAngles w = face_angles(e);
  // Faces around v2: T2, T3, T1' (v1', v2, v3), T4' (v1', v2, v3').
  // Faces around v3: T3, T4, T1' (v1', v2, v3), T2' (v1', v2', v3).
  const double theta1 = w.omega(1, V::v1) + w.omega(2, V::v1) + w.omega(3, V::v1) + w.omega(4, V::v1);
  const double theta2 = w.omega(2, V::v2) + w.omega(3, V::v2) + w.omega_antipodal(1, V::v2) +
                        w.omega_antipodal(4, V::v2);
  const double theta3 = w.omega(3, V::v3) + w.omega(4, V::v3) + w.omega_antipodal(1, V::v3) +
                        w.omega_antipodal(2, V::v3);
  return ConeDeficits::make(kTwoPi - theta1, kTwoPi - theta2, kTwoPi - theta3);
}

AlphaBeta alpha_beta(const FaceAngles& w) {
  AlphaBeta ab;
  ab.alpha = (w.omega(1, V::v2p) + w.omega(4, V::v2p) + w.omega(4, V::v3) + w.omega(3, V::v3) - kPi) / 2.0;
  ab.beta = (w.omega(3, V::v2) + w.omega(2, V::v2) + w.omega(2, V::v3p) + w.omega(1, V::v3p) - kPi) / 2.0;
  if (!(ab.alpha > 0.0 && ab.alpha < w.omega(3, V::v3))) {
    throw Error(ErrorCode::BoundsViolated, "alpha outside (0, w33)");
  }
  if (!(ab.beta > 0.0 && ab.beta < w.omega(3, V::v2))) {
    throw Error(ErrorCode::BoundsViolated, "beta outside (0, w32)");
  }
  return ab;
}

ChartConstruction chart_construction(const EmbeddedOctahedron& e) {
  ChartConstruction out;
  out.angles = alpha_beta(face_angles(e));
  const auto [alpha, beta] = out.angles;
  const Vec3 v1 = e.vertex(V::v1), v2 = e.vertex(V::v2), v3 = e.vertex(V::v3);
  const Vec3 v2p = e.vertex(V::v2p), v3p = e.vertex(V::v3p);
  out.o3 = angle_point(v3, v2, v1, alpha, beta);
  out.o1 = angle_point(v2p, v3p, v1, alpha, beta);
  out.chart = {norm(out.o1 - v2p), norm(out.o1 - v3p), norm(out.o3 - v1), norm(out.o1 - v1)};
  return out;
}

ChartPoint chart(const EmbeddedOctahedron& e) { return chart_construction(e).chart; }

EmbeddedOctahedron sample_octahedron(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> log_sigma(std::log(0.5), std::log(2.0));

  auto unit = [&] {
    Vec3 u{gauss(rng), gauss(rng), gauss(rng)};
    return (1.0 / norm(u)) * u;
  };
  for (;;) {
    // Random rotation from a random unit quaternion.
    double q[4];
    double qn = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      qn += x * x;
    }
    qn = std::sqrt(qn);
    const double w = q[0] / qn, x = q[1] / qn, y = q[2] / qn, z = q[3] / qn;
    const Vec3 r0{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)};
    const Vec3 r1{2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)};
    const Vec3 r2{2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
    const Vec3 sigma{std::exp(log_sigma(rng)), std::exp(log_sigma(rng)), std::exp(log_sigma(rng))};

    std::array<Vec3, 3> v{};
    for (Vec3& vi : v) {
      const Vec3 u = unit();
      const Vec3 s{sigma.x * u.x, sigma.y * u.y, sigma.z * u.z};
      vi = {dot(r0, s), dot(r1, s), dot(r2, s)};
    }
    const double normalized = std::abs(det(v[0], v[1], v[2])) / (norm(v[0]) * norm(v[1]) * norm(v[2]));
    if (normalized < 0.05) continue;
    try {
      return EmbeddedOctahedron::validate(v[0], v[1], v[2]);
    } catch (const Error&) {
      continue;
    }
  }
}

} // namespace octa
