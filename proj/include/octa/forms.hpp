#pragma once

// Deficit data, the area quadratic form and its Lorentzian bilinear product.
//
// Coordinates are ordered (a, b, c, d). The area form is
//   Q(p) = 2[(ab + cd) S1 + (ac + bd) S2 + (ad + bc) S3],  Si = sin(delta_i / 2),
// whose polarization is the bilinear product B used throughout the moduli code.

#include <array>
#include <utility>

#include "octa/vec.hpp"

namespace octa {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Tolerance on |d1 + d2 + d3 - 2pi| accepted by ConeDeficits::make.
inline constexpr double kDeficitSumTolerance = 1e-9;

/// Prescribed cone-deficits (d1, d2, d3) of a centrally symmetric octahedron.
/// Each antipodal vertex pair shares a deficit, so the six deficits total 4pi.
class ConeDeficits {
public:
  /// Validates and renormalizes so the sum is 2pi to machine precision.
  /// Throws Error{NonPositiveDeficit} or Error{SumNotTwoPi}.
  static ConeDeficits make(double d1, double d2, double d3);

  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::array<double, 3>& values() const { return values_; }

  friend bool operator==(const ConeDeficits&, const ConeDeficits&) = default;

private:
  explicit ConeDeficits(std::array<double, 3> v) : values_(v) {}
  std::array<double, 3> values_;
};

/// Si = sin(di / 2), Ci = cos(di / 2).
struct TrigPack {
  std::array<double, 3> s{};
  std::array<double, 3> c{};

  friend bool operator==(const TrigPack&, const TrigPack&) = default;
};

/// Point (a, b, c, d) of the chart: a = |O1 v2'|, b = |O1 v3'|, c = |O3 v1|, d = |O1 v1|.
struct ChartPoint {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Vec4 coords() const { return {a, b, c, d}; }
  static constexpr ChartPoint from(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

using GramMatrix = std::array<std::array<double, 4>, 4>;

/// Eigenvalues of the Gram matrix, in the order of the factored characteristic
/// polynomial: x1 = S1+S2+S3, x2 = S3-S2-S1, x3 = S2-S1-S3, x4 = S1-S2-S3.
struct Spectrum {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;

  std::array<double, 4> values() const { return {x1, x2, x3, x4}; }
};

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Index k in {0,1,2} such that S_{k+1} is the coefficient of the monomial
/// x_i x_j in the area form ({a,b},{c,d} -> 0; {a,c},{b,d} -> 1; {a,d},{b,c} -> 2).
constexpr int monomial_group(int i, int j) { return (i ^ j) - 1; }

TrigPack trig_pack(const ConeDeficits& d);
GramMatrix gram_matrix(const TrigPack& t);

/// Closed-form roots of the characteristic polynomial.
Spectrum spectrum(const TrigPack& t);

/// Throws Error{DegenerateForm} when an eigenvalue is within 1e-12 of zero.
Signature signature(const TrigPack& t);

double lorentz_product(const Vec4& p, const Vec4& q, const TrigPack& t);

/// Surface area of the octahedron with chart p; equals lorentz_product(p, p).
double area(const ChartPoint& p, const TrigPack& t);

} // namespace octa
