#include "octa/volume.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <vector>

#include "octa/error.hpp"
#include "octa/moduli.hpp"

namespace octa {

namespace {

// Coefficients of the Clausen series
//   Cl2(t) = t - t log|t| + sum_n kClausen[n] t^(2n+1),  |t| <= pi,
// with kClausen[n] = 2 zeta(2n) / ((2 pi)^(2n) 2n (2n + 1)). Terms shrink at
// least like 4^-n on [-pi, pi].
constexpr int kClausenTerms = 30;

const std::array<double, kClausenTerms + 1>& clausen_coefficients() {
  static const auto table = [] {
    std::array<double, kClausenTerms + 1> c{};
    for (int n = 1; n <= kClausenTerms; ++n) {
      const double two_n = 2.0 * n;
      c[n] = 2.0 * std::riemann_zeta(two_n) / (std::pow(kTwoPi, two_n) * two_n * (two_n + 1.0));
    }
    return c;
  }();
  return table;
}

double clausen2(double t) {
  // Reduce to (-pi, pi]; Cl2 is 2pi-periodic and odd.
  t = std::remainder(t, kTwoPi);
  if (t == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double t2 = t * t;
  double power = t * t2;
  double series = 0.0;
  for (int n = 1; n <= kClausenTerms; ++n) {
    const double term = c[n] * power;
    series += term;
    if (std::abs(term) < 1e-18) break;
    power *= t2;
  }
  return t - t * std::log(std::abs(t)) + series;
}

// splitmix64 finalizer; used as a counter-based generator keyed per shard.
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterStream {
public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  double uniform() {
    const std::uint64_t bits = mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct ShardSums {
  double sum = 0.0, sum_sq = 0.0;           // truncation eps
  double sum_half = 0.0, sum_sq_half = 0.0; // truncation eps / 2
};

// Defensive mixture: with weight 1/5 a uniform point of the tetrahedron, and
// with weight 1/5 per vertex i a point x = v_i + t (y - v_i), y uniform on the
// opposite face and t uniform in (0,1). The vertex components have density
// 1 / (3 V (1 - l_i)^2) in barycentric l, which makes the integrand's variance
// finite near the ideal vertices.
ShardSums run_shard(const std::array<Vec3, 4>& tet, double simplex_volume, std::uint64_t seed,
                    std::uint64_t shard, std::uint64_t count, double cutoff, double cutoff_half) {
  CounterStream rng(seed, shard);
  ShardSums s;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double pick = rng.uniform();
    std::array<double, 3> u{rng.uniform(), rng.uniform(), rng.uniform()};
    std::array<double, 4> l{};
    const int component = std::min(4, static_cast<int>(pick * 5.0));
    if (component == 4) {
      std::sort(u.begin(), u.end());
      l = {u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
    } else {
      const double t = u[2];
      const double lo = std::min(u[0], u[1]), hi = std::max(u[0], u[1]);
      const std::array<double, 3> face{lo, hi - lo, 1.0 - hi};
      for (int k = 0, f = 0; k < 4; ++k) l[k] = k == component ? 1.0 - t : t * face[f++];
    }
    const Vec3 x = l[0] * tet[0] + l[1] * tet[1] + l[2] * tet[2] + l[3] * tet[3];
    const double gap = 1.0 - dot(x, x);
    if (!(gap >= cutoff_half)) continue;
    double density = 1.0;
    for (const double li : l) density += 1.0 / (3.0 * (1.0 - li) * (1.0 - li));
    density /= 5.0 * simplex_volume;
    const double f = 1.0 / (gap * gap * density);
    s.sum_half += f;
    s.sum_sq_half += f * f;
    if (gap >= cutoff) {
      s.sum += f;
      s.sum_sq += f * f;
    }
  }
  return s;
}

} // namespace

double lobachevsky(double x) { return 0.5 * clausen2(2.0 * x); }

double tetrahedron_volume(const ConeDeficits& d) {
  return lobachevsky(d[0] / 2.0) + lobachevsky(d[1] / 2.0) + lobachevsky(d[2] / 2.0);
}

VolumeEstimate monte_carlo_volume(const ConeDeficits& d, const MonteCarloOptions& options) {
  if (options.samples < 10'000) {
    throw Error(ErrorCode::BadSampleCount, "Monte Carlo needs at least 10^4 samples");
  }
  if (!(options.truncation > 0.0 && options.truncation <= 0.1)) {
    throw Error(ErrorCode::BadTruncation, "truncation must lie in (0, 0.1]");
  }
  const TrigPack t = trig_pack(d);
  std::array<Vec3, 4> tet{};
  const auto ideal = ideal_vertices(t);
  for (int i = 0; i < 4; ++i) tet[i] = klein_coordinates(ideal[i], t);
  const double simplex_volume = std::abs(det(tet[1] - tet[0], tet[2] - tet[0], tet[3] - tet[0])) / 6.0;

  const std::uint64_t shards = (options.samples + kMonteCarloShardSize - 1) / kMonteCarloShardSize;
  std::vector<ShardSums> results(shards);
  auto shard_size = [&](std::uint64_t k) {
    return std::min(kMonteCarloShardSize, options.samples - k * kMonteCarloShardSize);
  };
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t k = first; k < shards; k += stride) {
      results[k] = run_shard(tet, simplex_volume, options.seed, k, shard_size(k), options.truncation,
                             options.truncation / 2.0);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(shards)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  // Reduce in shard order so the result is independent of scheduling.
  ShardSums total;
  for (const auto& r : results) {
    total.sum += r.sum;
    total.sum_sq += r.sum_sq;
    total.sum_half += r.sum_half;
    total.sum_sq_half += r.sum_sq_half;
  }
  const double n = static_cast<double>(options.samples);
  auto estimate = [&](double sum, double sum_sq, double& value, double& err) {
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    value = mean;
    err = std::sqrt(var / (n - 1.0));
  };
  VolumeEstimate out;
  out.samples = options.samples;
  out.seed = options.seed;
  out.truncation = options.truncation;
  estimate(total.sum, total.sum_sq, out.value, out.std_error);
  estimate(total.sum_half, total.sum_sq_half, out.value_half_truncation, out.std_error_half_truncation);
  return out;
}

} // namespace octa
