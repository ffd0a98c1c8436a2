#ifndef PTSH_QUADRATURE_HPP
#define PTSH_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptsh/common.hpp"
#include "ptsh/special_functions.hpp"

namespace ptsh {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending on [-1,1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree <= 2n-1.
/// Nodes by Newton iteration on P_n seeded with the Chebyshev-like estimate.
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n < 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double u = std::cos(kPi * (n - 1 - i + 0.75) / (n + 0.5));  // ascending order
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, pm1] = legendre_p_pair(n, u);
      dp = n * (u * p - pm1) / (u * u - 1.0);
      const double du = p / dp;
      u -= du;
      if (std::abs(du) < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_legendre: Newton did not converge");
    const auto [p, pm1] = legendre_p_pair(n, u);
    dp = n * (u * p - pm1) / (u * u - 1.0);
    rule.nodes[i] = u;
    rule.weights[i] = 2.0 / ((1.0 - u * u) * dp * dp);
  }
  return rule;
}

/// Tensor grid on S^2: Gauss-Legendre in u = cos(theta), uniform periodic in phi.
/// Sum of weights is 4 pi.
struct SphereGrid {
  std::vector<double> theta_nodes;    // theta_i = acos(u_i), u ascending
  std::vector<double> theta_weights;  // Gauss-Legendre weights in u
  std::vector<double> phi_nodes;      // 2 pi j / n_phi
  double phi_weight = 0.0;            // 2 pi / n_phi

  int n_theta() const { return static_cast<int>(theta_nodes.size()); }
  int n_phi() const { return static_cast<int>(phi_nodes.size()); }
  std::size_t size() const { return theta_nodes.size() * phi_nodes.size(); }
};

inline SphereGrid make_sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::domain_error("make_sphere_grid: sizes must be >= 1");
  SphereGrid g;
  const auto rule = gauss_legendre(n_theta);
  g.theta_nodes.resize(n_theta);
  g.theta_weights = rule.weights;
  for (int i = 0; i < n_theta; ++i) g.theta_nodes[i] = std::acos(rule.nodes[i]);
  g.phi_nodes.resize(n_phi);
  for (int j = 0; j < n_phi; ++j) g.phi_nodes[j] = 2.0 * kPi * j / n_phi;
  g.phi_weight = 2.0 * kPi / n_phi;
  return g;
}

inline int default_n_theta(int l_max) { return 2 * l_max + 16; }
inline int default_n_phi(int l_max) { return 4 * l_max + 16; }

/// Grid sized so integrands of degree 2*l_max plus the smooth gauge factor
/// are captured to ~1e-10.
inline SphereGrid default_sphere_grid(int l_max) {
  return make_sphere_grid(default_n_theta(l_max), default_n_phi(l_max));
}

/// Quadrature of a callable over the sphere, sum_i sum_j w_i (2pi/n_phi) F(theta_i, phi_j).
inline Complex integrate_sphere(const SphericalField& f, const SphereGrid& g) {
  Complex acc = 0.0;
  for (int i = 0; i < g.n_theta(); ++i) {
    Complex row = 0.0;
    for (int j = 0; j < g.n_phi(); ++j) row += f(g.theta_nodes[i], g.phi_nodes[j]);
    acc += g.theta_weights[i] * row;
  }
  return g.phi_weight * acc;
}

/// Same for a field pre-sampled theta-major: samples[i * n_phi + j].
inline Complex integrate_sphere(const std::vector<Complex>& samples, const SphereGrid& g) {
  if (samples.size() != g.size())
    throw std::invalid_argument("integrate_sphere: sample count does not match grid");
  Complex acc = 0.0;
  for (int i = 0; i < g.n_theta(); ++i) {
    Complex row = 0.0;
    for (int j = 0; j < g.n_phi(); ++j) row += samples[static_cast<std::size_t>(i) * g.n_phi() + j];
    acc += g.theta_weights[i] * row;
  }
  return g.phi_weight * acc;
}

/// Radial rule on (0, r_max]; weights carry the r^2 Jacobian so
/// integrate_radial(F) computes int F(r) r^2 dr directly.
struct RadialGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

inline RadialGrid make_radial_grid(double r_max, int n) {
  if (n < 1 || r_max <= 0.0) throw std::domain_error("make_radial_grid: bad parameters");
  const auto rule = gauss_legendre(n);
  RadialGrid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double half = 0.5 * r_max;
  for (int i = 0; i < n; ++i) {
    const double r = half * (rule.nodes[i] + 1.0);
    g.nodes[i] = r;
    g.weights[i] = half * rule.weights[i] * r * r;
  }
  return g;
}

/// Grid adequate for hydrogen-type states up to principal quantum number N:
/// cutoff 40 N^2 / Z keeps the e^{-Zr/N} tail truncation below 1e-12.
inline RadialGrid hydrogen_radial_grid(int n_principal, double z) {
  if (n_principal < 1 || z <= 0.0) throw std::domain_error("hydrogen_radial_grid: bad parameters");
  return make_radial_grid(40.0 * n_principal * n_principal / z, 64 + 16 * n_principal);
}

inline Complex integrate_radial(const std::function<Complex(double)>& f, const RadialGrid& g) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.weights[i] * f(g.nodes[i]);
  return acc;
}

inline Complex integrate_radial(const std::vector<Complex>& samples, const RadialGrid& g) {
  if (samples.size() != g.size())
    throw std::invalid_argument("integrate_radial: sample count does not match grid");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.weights[i] * samples[i];
  return acc;
}

}  // namespace ptsh

#endif  // PTSH_QUADRATURE_HPP
