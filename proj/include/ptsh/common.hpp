#ifndef PTSH_COMMON_HPP
#define PTSH_COMMON_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ptsh {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline double component(const Vec3& v, int axis) {
  switch (axis) {
    case 0: return v.x;
    case 1: return v.y;
    default: return v.z;
  }
}

inline Vec3 shifted(const Vec3& v, int axis, double d) {
  Vec3 w = v;
  switch (axis) {
    case 0: w.x += d; break;
    case 1: w.y += d; break;
    default: w.z += d; break;
  }
  return w;
}

/// (r, theta, phi) point with the physics convention theta in [0,pi].
struct SphericalPoint {
  double r = 1.0;
  double theta = 0.0;
  double phi = 0.0;

  Vec3 to_cartesian() const {
    const double st = std::sin(theta);
    return {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
  }

  static SphericalPoint from_cartesian(const Vec3& v) {
    SphericalPoint p;
    p.r = v.norm();
    p.theta = (p.r > 0.0) ? std::acos(std::clamp(v.z / p.r, -1.0, 1.0)) : 0.0;
    p.phi = std::atan2(v.y, v.x);
    return p;
  }
};

/// Scalar field on the sphere, F(theta, phi).
using SphericalField = std::function<Complex(double theta, double phi)>;

/// Scalar field on 3-space.
using SpatialField = std::function<Complex(const Vec3&)>;

inline void require_finite(const Complex& v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::domain_error(std::string("non-finite value in ") + where);
}

/// 64-bit linear congruential generator (Knuth MMIX multiplier).
/// Used for all seeded sample points so reports are reproducible
/// across platforms and implementations.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform double in [0,1) from the top 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Random point at radius r with |z|/r < 0.9 (keeps FD stencils away from the poles).
  Vec3 sphere_point(double r = 1.0) {
    for (;;) {
      const double z = uniform(-1.0, 1.0);
      if (std::abs(z) >= 0.9) continue;
      const double phi = uniform(0.0, 2.0 * kPi);
      const double s = std::sqrt(1.0 - z * z);
      return {r * s * std::cos(phi), r * s * std::sin(phi), r * z};
    }
  }

 private:
  std::uint64_t state_;
};

/// Thread cap from PT_HARMONICS_THREADS (default: hardware concurrency).
inline unsigned max_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("PT_HARMONICS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Deterministic parallel loop: the index space is split into contiguous
/// chunks, each task writes only to its own indices.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned nt = std::min<std::size_t>(max_threads(), n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  const std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ptsh

#endif  // PTSH_COMMON_HPP
