// Test-only brute-force references, independent of the library's recurrence
// paths: Rodrigues-formula Legendre values via symbolic polynomial
// differentiation and the finite-series Laguerre definition.

#ifndef PTSH_TESTS_ORACLES_HPP
#define PTSH_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

namespace oracles {

// Dense polynomial, coeffs[k] * u^k.
using Poly = std::vector<double>;

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = k * p[k];
  return out;
}

inline double eval(const Poly& p, double u) {
  double acc = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * u + p[k];
  return acc;
}

// P_l as a polynomial: (1/(2^l l!)) d^l/du^l (u^2 - 1)^l.
inline Poly legendre_poly(int l) {
  Poly p = {1.0};
  const Poly base = {-1.0, 0.0, 1.0};  // u^2 - 1
  for (int k = 0; k < l; ++k) p = multiply(p, base);
  double scale = 1.0;
  for (int k = 1; k <= l; ++k) {
    p = derivative(p);
    scale *= 2.0 * k;
  }
  for (auto& c : p) c /= scale;
  return p;
}

inline double legendre(int l, double u) { return eval(legendre_poly(l), u); }

// P_l^m by differentiating the Rodrigues polynomial m more times and applying
// the (-1)^m (1-u^2)^{m/2} prefactor.
inline double assoc_legendre(int l, int m, double u) {
  Poly p = legendre_poly(l);
  for (int k = 0; k < m; ++k) p = derivative(p);
  const double pre = ((m % 2 == 0) ? 1.0 : -1.0) * std::pow(1.0 - u * u, 0.5 * m);
  return pre * eval(p, u);
}

inline double binomial(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

// L_n^k(x) = sum_j (-1)^j C(n+k, n-j) x^j / j!
inline double laguerre(int n, int k, double x) {
  double acc = 0.0;
  double xpow = 1.0, jfac = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      xpow *= x;
      jfac *= j;
    }
    const double term = binomial(n + k, n - j) * xpow / jfac;
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace oracles

#endif
