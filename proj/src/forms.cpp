#include "octa/forms.hpp"

#include <cmath>
#include <sstream>

#include "octa/error.hpp"

namespace octa {

ConeDeficits ConeDeficits::make(double d1, double d2, double d3) {
  const std::array<double, 3> raw{d1, d2, d3};
  for (int i = 0; i < 3; ++i) {
    if (!(raw[i] > 0.0) || !(raw[i] < kTwoPi)) {
      std::ostringstream msg;
      msg << "deficit " << (i + 1) << " = " << raw[i] << " is outside (0, 2pi)";
      throw Error(ErrorCode::NonPositiveDeficit, msg.str());
    }
  }
  const double excess = (d1 + d2 + d3) - kTwoPi;
  if (!(std::abs(excess) <= kDeficitSumTolerance)) {
    std::ostringstream msg;
    msg << "deficits sum to " << (d1 + d2 + d3) << ", expected 2pi";
    throw Error(ErrorCode::SumNotTwoPi, msg.str());
  }
  std::array<double, 3> v = raw;
  for (double& x : v) x -= excess / 3.0;
  // Let the last deficit absorb any rounding left over from the shift.
  v[2] = kTwoPi - v[0] - v[1];
  for (int i = 0; i < 3; ++i) {
    if (!(v[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveDeficit, "deficit vanishes after renormalization");
    }
  }
  return ConeDeficits(v);
}

TrigPack trig_pack(const ConeDeficits& d) {
  TrigPack t;
  for (int i = 0; i < 3; ++i) {
    t.s[i] = std::sin(d[i] / 2.0);
    t.c[i] = std::cos(d[i] / 2.0);
  }
  return t;
}

GramMatrix gram_matrix(const TrigPack& t) {
  GramMatrix m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m[i][j] = (i == j) ? 0.0 : t.s[monomial_group(i, j)];
    }
  }
  return m;
}

Spectrum spectrum(const TrigPack& t) {
  const auto& s = t.s;
  return {s[0] + s[1] + s[2], s[2] - s[1] - s[0], s[1] - s[0] - s[2], s[0] - s[1] - s[2]};
}

Signature signature(const TrigPack& t) {
  Signature sig;
  for (double x : spectrum(t).values()) {
    if (std::abs(x) < 1e-12) {
      throw Error(ErrorCode::DegenerateForm, "area form is degenerate for these deficits");
    }
    (x > 0.0 ? sig.positive : sig.negative) += 1;
  }
  return sig;
}

double lorentz_product(const Vec4& p, const Vec4& q, const TrigPack& t) {
  const auto& s = t.s;
  const auto [a, b, c, d] = p;
  const auto [a2, b2, c2, d2] = q;
  return (a * b2 + a2 * b + c * d2 + c2 * d) * s[0] + (a * c2 + a2 * c + b * d2 + b2 * d) * s[1] +
         (a * d2 + a2 * d + b * c2 + b2 * c) * s[2];
}

double area(const ChartPoint& p, const TrigPack& t) {
  const auto v = p.coords();
  return lorentz_product(v, v, t);
}

} // namespace octa
