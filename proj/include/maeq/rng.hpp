#pragma once

#include <cstdint>
#include <random>

namespace maeq {

// Deterministic substream derivation: every (seed, trial, entity) triple maps
// to an independent-looking 64-bit seed via splitmix64 finalization. Entity
// ids: 0 = Bob, 1 = virtual Eve, 2+m = real Eve m; large ids are reserved for
// scenario-level draws (angles, deployment distances).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kEntityBob = 0;
constexpr std::uint64_t kEntityVirtualEve = 1;
inline std::uint64_t entity_eve(int m) { return 2 + static_cast<std::uint64_t>(m); }
constexpr std::uint64_t kEntityAngles = 1u << 20;
constexpr std::uint64_t kEntityDeployment = (1u << 20) + 1;

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial,
                                    std::uint64_t entity) {
  std::uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ (entity * 0x9e3779b97f4a7c15ULL + 1));
  return h;
}

// Thin wrapper producing uniforms and normals with fully pinned-down bit
// behavior. std::mt19937_64 output is standardized; the distributions in
// <random> are not, so the transforms are written out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second variate.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Numerically stabilized accumulation (Kahan-Neumaier).
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace maeq
