#ifndef PTSH_SPECIAL_FUNCTIONS_HPP
#define PTSH_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ptsh/common.hpp"

namespace ptsh {

/// Degree/order pair for Y_lm, |m| <= l.
struct HarmonicIndex {
  int l = 0;
  int m = 0;

  HarmonicIndex() = default;
  HarmonicIndex(int l_, int m_) : l(l_), m(m_) {
    if (l < 0 || std::abs(m) > l)
      throw std::domain_error("HarmonicIndex: need l >= 0 and |m| <= l");
  }
};

namespace detail {

inline double clamp_u(double u, const char* who) {
  if (std::abs(u) > 1.0 + 1e-12)
    throw std::domain_error(std::string(who) + ": argument outside [-1,1]");
  return std::clamp(u, -1.0, 1.0);
}

}  // namespace detail

/// P_l(u) and P_{l-1}(u) by the three-term recurrence.
inline std::pair<double, double> legendre_p_pair(int l, double u) {
  u = detail::clamp_u(u, "legendre_p");
  if (l < 0) throw std::domain_error("legendre_p: l < 0");
  double pm1 = 0.0;  // P_{k-1}
  double p = 1.0;    // P_k
  for (int k = 0; k < l; ++k) {
    const double next = ((2 * k + 1) * u * p - k * pm1) / (k + 1);
    pm1 = p;
    p = next;
  }
  return {p, pm1};
}

inline double legendre_p(int l, double u) { return legendre_p_pair(l, u).first; }

/// Associated Legendre P_l^m(u), 0 <= m <= l, with the Condon-Shortley (-)^m phase.
inline double assoc_legendre(int l, int m, double u) {
  if (l < 0 || m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  u = detail::clamp_u(u, "assoc_legendre");
  if (m == 0) return legendre_p(l, u);

  const double s2 = 1.0 - u * u;
  if (s2 <= 0.0) return 0.0;  // (1-u^2)^{m/2} vanishes exactly at the poles

  // P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}
  double pmm = 1.0;
  const double s = std::sqrt(s2);
  for (int k = 1; k <= m; ++k) pmm *= -(2 * k - 1) * s;
  if (l == m) return pmm;

  double pm1 = pmm;                      // P_m^m
  double p = u * (2 * m + 1) * pmm;      // P_{m+1}^m
  for (int k = m + 2; k <= l; ++k) {
    const double next = (u * (2 * k - 1) * p - (k + m - 1) * pm1) / (k - m);
    pm1 = p;
    p = next;
  }
  return p;
}

namespace detail {

/// sqrt((2l+1)(l-m)!/(4 pi (l+m)!)), m >= 0. Direct products for small l,
/// log-space beyond l ~ 15 to avoid factorial overflow.
inline double ylm_norm(int l, int m) {
  if (l <= 15) {
    double ratio = 1.0;  // (l-m)!/(l+m)!
    for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
    return std::sqrt((2 * l + 1) * ratio / (4.0 * kPi));
  }
  const double lr = std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0);
  return std::sqrt((2 * l + 1) / (4.0 * kPi)) * std::exp(0.5 * lr);
}

}  // namespace detail

/// Y_lm(theta, phi) with normalization sqrt((2l+1)(l-m)!/(4pi(l+m)!)).
/// Negative m through P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m, which gives
/// Y_{l,-m} = (-1)^m conj(Y_{l,m}).
inline Complex spherical_harmonic(const HarmonicIndex& idx, double theta, double phi) {
  if (theta < -1e-9 || theta > kPi + 1e-9)
    throw std::domain_error("spherical_harmonic: theta outside [0,pi]");
  theta = std::clamp(theta, 0.0, kPi);

  const int l = idx.l;
  const int am = std::abs(idx.m);
  const double p = assoc_legendre(l, am, std::cos(theta));
  const double norm = detail::ylm_norm(l, am);
  const Complex phase = std::polar(1.0, idx.m * phi);
  Complex y = norm * p * phase;
  if (idx.m < 0 && (am % 2) != 0) y = -y;
  require_finite(y, "spherical_harmonic");
  return y;
}

/// Generalized Laguerre L_n^k(x) by the three-term recurrence.
inline double laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("laguerre: need n, k >= 0");
  if (x < 0.0) throw std::domain_error("laguerre: x < 0");
  double pm1 = 0.0;
  double p = 1.0;  // L_0^k
  for (int j = 0; j < n; ++j) {
    const double next = ((2 * j + 1 + k - x) * p - (j + k) * pm1) / (j + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace ptsh

#endif  // PTSH_SPECIAL_FUNCTIONS_HPP
