#include <gtest/gtest.h>

#include <cmath>

#include "octa/embedding.hpp"
#include "octa/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace octa {
namespace {

using V = VertexLabel;

// 2pi minus the angles at +-v_i over the four hull triangles containing v_i.
std::array<double, 3> deficits_by_enumeration(const std::array<Vec3, 3>& v) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    double total = 0.0;
    for (double sj : {1.0, -1.0}) {
      for (double sk : {1.0, -1.0}) total += oracle::angle(v[i], sj * v[j], sk * v[k]);
    }
    out[i] = kTwoPi - total;
  }
  return out;
}

EmbeddedOctahedron regular() { return EmbeddedOctahedron::validate({1, 0, 0}, {0, 1, 0}, {0, 0, 1}); }

TEST(Validate, RegularIsValid) { EXPECT_NO_THROW(regular()); }

TEST(Validate, CoplanarIsDegenerate) {
  try {
    EmbeddedOctahedron::validate({1, 0, 0}, {0, 1, 0}, {1, 1, 0});
    FAIL() << "expected DegenerateVertices";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateVertices);
  }
}

TEST(Validate, AgreesWithFacePlaneOracle) {
  const Vec3 a{1, 0, 0}, b{0, 1, 0}, c{10, 10, 1};
  const bool expected = oracle::hull_is_octahedral(a, b, c);
  EXPECT_TRUE(expected);
  EXPECT_NO_THROW(EmbeddedOctahedron::validate(a, b, c));

  testing::Gen gen(11);
  for (int n = 0; n < 500; ++n) {
    const Vec3 p = gen.vec3(), q = gen.vec3(), r = gen.vec3();
    if (std::abs(det(p, q, r)) < 1e-6) continue;
    EXPECT_TRUE(oracle::hull_is_octahedral(p, q, r));
    EXPECT_NO_THROW(EmbeddedOctahedron::validate(p, q, r));
  }
}

TEST(FaceAngles, RegularAllThirdPi) {
  const auto w = face_angles(regular());
  for (const auto& face : w.by_slot) {
    for (double a : face) EXPECT_NEAR(a, kPi / 3, 1e-15);
  }
}

TEST(FaceAngles, EachFaceSumsToPi) {
  testing::Gen gen(12);
  for (int n = 0; n < 200; ++n) {
    const auto w = face_angles(sample_octahedron(testing::test_seed(), n));
    for (const auto& face : w.by_slot) EXPECT_NEAR(face[0] + face[1] + face[2], kPi, 1e-13);
  }
}

TEST(FaceAngles, StretchedMatchesDotProduct) {
  const auto e = EmbeddedOctahedron::validate({2, 0, 0}, {0, 1, 0}, {0, 0, 1});
  const auto w = face_angles(e);
  EXPECT_NEAR(w.omega(3, V::v1), oracle::angle({2, 0, 0}, {0, 1, 0}, {0, 0, 1}), 1e-14);
  EXPECT_NEAR(w.omega(3, V::v2), oracle::angle({0, 1, 0}, {2, 0, 0}, {0, 0, 1}), 1e-14);
  EXPECT_NEAR(w.omega(1, V::v2p), oracle::angle({0, -1, 0}, {2, 0, 0}, {0, 0, -1}), 1e-14);
}

TEST(FaceAngles, AntipodalFacesRepeatAngles) {
  for (int n = 0; n < 100; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto w = face_angles(e);
    for (int f = 1; f <= 4; ++f) {
      const auto& tri = faces_at_v1()[f - 1];
      for (int k = 0; k < 3; ++k) {
        const Vec3 at = e.vertex(antipode(tri[k]));
        const Vec3 p = e.vertex(antipode(tri[(k + 1) % 3]));
        const Vec3 q = e.vertex(antipode(tri[(k + 2) % 3]));
        EXPECT_NEAR(w.omega_antipodal(f, antipode(tri[k])), oracle::angle(at, p, q), 1e-12);
        EXPECT_NEAR(w.omega(f, tri[k]), oracle::angle(at, p, q), 1e-12);
      }
    }
  }
}

TEST(Deficits, Regular) {
  const auto d = deficits(regular());
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(d[i], kTwoPi / 3, 1e-14);
}

TEST(Deficits, StretchedMatchesEnumeration) {
  const std::array<Vec3, 3> v{Vec3{2, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  const auto d = deficits(EmbeddedOctahedron::validate(v[0], v[1], v[2]));
  const auto ref = deficits_by_enumeration(v);
  for (int i = 0; i < 3; ++i) {
    EXPECT_GT(d[i], 0.0);
    EXPECT_LT(d[i], kTwoPi);
    EXPECT_NEAR(d[i], ref[i], 1e-13);
  }
}

TEST(Deficits, GaussBonnetAndEnumerationOnRandomShapes) {
  for (int n = 0; n < 1000; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto ref = deficits_by_enumeration(e.generators());
    EXPECT_NEAR(ref[0] + ref[1] + ref[2], kTwoPi, 1e-10);
    const auto d = deficits(e);
    for (int i = 0; i < 3; ++i) ASSERT_NEAR(d[i], ref[i], 1e-10);
  }
}

TEST(AlphaBeta, Regular) {
  const auto ab = alpha_beta(face_angles(regular()));
  EXPECT_NEAR(ab.alpha, kPi / 6, 1e-15);
  EXPECT_NEAR(ab.beta, kPi / 6, 1e-15);
}

TEST(AlphaBeta, BoundsAndHalfDeficitOnRandomShapes) {
  for (int n = 0; n < 1000; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto w = face_angles(e);
    const auto ab = alpha_beta(w);
    const auto d = deficits(e);
    EXPECT_GT(ab.alpha, 0.0);
    EXPECT_LT(ab.alpha, w.omega(3, V::v3));
    EXPECT_GT(ab.beta, 0.0);
    EXPECT_LT(ab.beta, w.omega(3, V::v2));
    ASSERT_NEAR(ab.alpha + ab.beta, d[0] / 2, 1e-12);
  }
}

TEST(Chart, Regular) {
  const auto p = chart(regular());
  const double expected = std::sqrt(2.0) * std::sin(kPi / 6) / std::sin(2 * kPi / 3);
  EXPECT_NEAR(expected, std::sqrt(2.0 / 3.0), 1e-15);
  for (double x : p.coords()) EXPECT_NEAR(x, expected, 1e-12);
}

TEST(Chart, OPointsSitInsideTheirFaces) {
  for (int n = 0; n < 200; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto c = chart_construction(e);
    const auto ab = c.angles;
    // O3 in T3 = (v1, v2, v3): angle alpha at v3 and beta at v2
    EXPECT_NEAR(oracle::angle(e.vertex(V::v3), c.o3, e.vertex(V::v2)), ab.alpha, 1e-9);
    EXPECT_NEAR(oracle::angle(e.vertex(V::v2), c.o3, e.vertex(V::v3)), ab.beta, 1e-9);
    // O1 in T1 = (v1, v2', v3'): angle alpha at v2' and beta at v3'
    EXPECT_NEAR(oracle::angle(e.vertex(V::v2p), c.o1, e.vertex(V::v3p)), ab.alpha, 1e-9);
    EXPECT_NEAR(oracle::angle(e.vertex(V::v3p), c.o1, e.vertex(V::v2p)), ab.beta, 1e-9);
    // congruent triangles O3 v3 v2 and O1 v2' v3'
    EXPECT_NEAR(norm(c.o3 - e.vertex(V::v3)), c.chart.a, 1e-12 * c.chart.a + 1e-12);
    EXPECT_NEAR(norm(c.o1 - e.vertex(V::v2p)), c.chart.a, 1e-12);
    EXPECT_NEAR(norm(c.o1 - e.vertex(V::v3p)), c.chart.b, 1e-12);
    EXPECT_NEAR(norm(c.o3 - e.vertex(V::v2)), c.chart.b, 1e-10);
  }
}

TEST(Chart, StretchedSatisfiesAreaIdentity) {
  const Vec3 v1{2, 0, 0}, v2{0, 1, 0}, v3{0, 0, 1};
  const auto e = EmbeddedOctahedron::validate(v1, v2, v3);
  const auto p = chart(e);
  for (double x : p.coords()) EXPECT_GT(x, 0.0);
  const double mesh = oracle::mesh_area(v1, v2, v3);
  EXPECT_NEAR(e.surface_area(), mesh, 1e-13 * mesh);
  EXPECT_LE(std::abs(area(p, trig_pack(deficits(e))) - mesh) / mesh, 1e-10);
}

TEST(Chart, AreaIdentityOnRandomShapes) {
  for (int n = 0; n < 1000; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto g = e.generators();
    const double mesh = oracle::mesh_area(g[0], g[1], g[2]);
    const double formula = area(chart(e), trig_pack(deficits(e)));
    ASSERT_LE(std::abs(formula - mesh) / mesh, 1e-9) << "instance " << n;
  }
}

TEST(Chart, ScalesLinearly) {
  testing::Gen gen(13);
  for (int n = 0; n < 200; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const double s = gen.log_uniform(0.2, 5.0);
    const auto g = e.generators();
    const auto scaled = EmbeddedOctahedron::validate(s * g[0], s * g[1], s * g[2]);
    const auto p = chart(e).coords(), q = chart(scaled).coords();
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(q[i], s * p[i], 1e-12 * s * p[i] + 1e-12);
    const auto d = deficits(e), ds = deficits(scaled);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d[i], ds[i], 1e-12);
  }
}

TEST(Chart, RotationInvariant) {
  testing::Gen gen(14);
  for (int n = 0; n < 200; ++n) {
    const auto e = sample_octahedron(testing::test_seed(), n);
    const auto r = gen.rotation();
    const auto g = e.generators();
    const auto rotated = EmbeddedOctahedron::validate(testing::apply(r, g[0]), testing::apply(r, g[1]),
                                                     testing::apply(r, g[2]));
    EXPECT_LE(testing::max_abs_diff(chart(e).coords(), chart(rotated).coords()), 1e-10);
  }
}

TEST(Sampler, ProducesValidReproducibleShapes) {
  for (int n = 0; n < 50; ++n) {
    const auto a = sample_octahedron(7, n).generators();
    const auto b = sample_octahedron(7, n).generators();
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(a[i].x, b[i].x);
      EXPECT_EQ(a[i].y, b[i].y);
      EXPECT_EQ(a[i].z, b[i].z);
    }
  }
}

} // namespace
} // namespace octa
