#ifndef PTSH_PT_CORE_HPP
#define PTSH_PT_CORE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptsh/common.hpp"
#include "ptsh/gauge.hpp"
#include "ptsh/quadrature.hpp"
#include "ptsh/special_functions.hpp"

namespace ptsh {

/// PT transform on the sphere: (PT F)(theta, phi) = conj(F(pi - theta, phi + pi)).
/// The shift phi + pi is passed through literally (no mod 2 pi) so that
/// non-periodic gauge factors transform correctly.
inline SphericalField pt_transform(const SphericalField& f) {
  return [f](double theta, double phi) { return std::conj(f(kPi - theta, phi + kPi)); };
}

/// Result of the constancy test e^{f*(r, pi-theta, phi+pi) + f(r, theta, phi)} = lambda.
struct PTCompatibility {
  Complex lambda = 0.0;       // grid mean of the exponential
  double max_deviation = 0.0; // max |g - lambda| over the grid, unclamped
  double tolerance = 0.0;
  bool compatible = false;
};

/// Evaluates the compatibility condition over the grid at radius r_sample.
/// Succeeds iff max|g - lambda| <= tol * (1 + |lambda|); lambda is the grid
/// mean of g for symmetric error cancellation.
inline PTCompatibility check_compatibility(const GaugeFunction& f, const SphereGrid& grid,
                                           double r_sample = 1.0, double tol = 1e-10) {
  if (grid.size() == 0) throw std::invalid_argument("check_compatibility: empty grid");
  if (tol <= 0.0) throw std::invalid_argument("check_compatibility: tol must be > 0");

  std::vector<Complex> g;
  g.reserve(grid.size());
  for (const double theta : grid.theta_nodes)
    for (const double phi : grid.phi_nodes)
      g.push_back(std::exp(f.pt_conjugate_eval(r_sample, theta, phi) + f.eval(r_sample, theta, phi)));

  Complex mean = 0.0;
  for (const auto& v : g) mean += v;
  mean /= static_cast<double>(g.size());

  double max_dev = 0.0;
  for (const auto& v : g) max_dev = std::max(max_dev, std::abs(v - mean));

  PTCompatibility out;
  out.lambda = mean;
  out.max_deviation = max_dev;
  out.tolerance = tol;
  out.compatible = max_dev <= tol * (1.0 + std::abs(mean));
  return out;
}

/// Y_flm = e^f Y_lm at (r, theta, phi).
inline Complex pt_harmonic(const GaugeFunction& f, const HarmonicIndex& idx, double r,
                           double theta, double phi) {
  return std::exp(f.eval(r, theta, phi)) * spherical_harmonic(idx, theta, phi);
}

/// Y_flm as a field on the sphere at fixed radius.
inline SphericalField pt_harmonic_field(const GaugeFunction& f, const HarmonicIndex& idx,
                                        double r = 1.0) {
  return [f, idx, r](double theta, double phi) { return pt_harmonic(f, idx, r, theta, phi); };
}

/// PT-inner product <F|G> = int (PT F) G dOmega. No conjugation of the bra
/// beyond the one inside the PT transform.
inline Complex pt_inner_product(const SphericalField& f, const SphericalField& g,
                                const SphereGrid& grid) {
  const SphericalField ptf = pt_transform(f);
  return integrate_sphere(
      [&ptf, &g](double theta, double phi) { return ptf(theta, phi) * g(theta, phi); }, grid);
}

/// Sampled variant: pt_bra_samples must already hold (PT F) at the grid nodes.
inline Complex pt_inner_product(const std::vector<Complex>& pt_bra_samples,
                                const std::vector<Complex>& ket_samples, const SphereGrid& grid) {
  if (pt_bra_samples.size() != ket_samples.size())
    throw std::invalid_argument("pt_inner_product: sample size mismatch");
  std::vector<Complex> prod(ket_samples.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = pt_bra_samples[i] * ket_samples[i];
  return integrate_sphere(prod, grid);
}

/// Complex coefficients a_lm, 0 <= l <= l_max, |m| <= l; (l_max+1)^2 entries.
struct HarmonicCoefficients {
  int l_max = 0;
  std::vector<Complex> coeffs;

  explicit HarmonicCoefficients(int lmax = 0)
      : l_max(lmax), coeffs(static_cast<std::size_t>(lmax + 1) * (lmax + 1), Complex(0.0)) {}

  static std::size_t flat_index(int l, int m) {
    return static_cast<std::size_t>(l) * l + (m + l);
  }

  Complex& at(int l, int m) { return coeffs[flat_index(l, m)]; }
  const Complex& at(int l, int m) const { return coeffs[flat_index(l, m)]; }
  std::size_t size() const { return coeffs.size(); }
};

/// a_lm = ((-1)^l / lambda) <Y_flm | F>_f for all (l,m) up to l_max.
/// lambda must come from a successful compatibility check for f.
inline HarmonicCoefficients expand(const SphericalField& field, const GaugeFunction& f,
                                   const Complex& lambda, int l_max, const SphereGrid& grid) {
  if (lambda == Complex(0.0)) throw std::invalid_argument("expand: lambda must be nonzero");
  HarmonicCoefficients out(l_max);

  // Samples of F at the nodes are shared across all (l,m).
  std::vector<Complex> fs(grid.size());
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j)
      fs[static_cast<std::size_t>(i) * grid.n_phi() + j] =
          field(grid.theta_nodes[i], grid.phi_nodes[j]);

  std::vector<std::pair<int, int>> lm;
  for (int l = 0; l <= l_max; ++l)
    for (int m = -l; m <= l; ++m) lm.emplace_back(l, m);

  parallel_for(lm.size(), [&](std::size_t k) {
    const auto [l, m] = lm[k];
    const SphericalField pt_bra = pt_transform(pt_harmonic_field(f, HarmonicIndex(l, m)));
    Complex acc = 0.0;
    for (int i = 0; i < grid.n_theta(); ++i) {
      Complex row = 0.0;
      for (int j = 0; j < grid.n_phi(); ++j)
        row += pt_bra(grid.theta_nodes[i], grid.phi_nodes[j]) *
               fs[static_cast<std::size_t>(i) * grid.n_phi() + j];
      acc += grid.theta_weights[i] * row;
    }
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    out.at(l, m) = sign / lambda * grid.phi_weight * acc;
  });
  return out;
}

/// Truncated synthesis F(theta, phi) = sum a_lm Y_flm.
inline Complex reconstruct(const HarmonicCoefficients& c, const GaugeFunction& f, double theta,
                           double phi, double r = 1.0) {
  Complex acc = 0.0;
  for (int l = 0; l <= c.l_max; ++l)
    for (int m = -l; m <= l; ++m) {
      const Complex a = c.at(l, m);
      if (a == Complex(0.0)) continue;
      acc += a * spherical_harmonic(HarmonicIndex(l, m), theta, phi);
    }
  return std::exp(f.eval(r, theta, phi)) * acc;
}

}  // namespace ptsh

#endif  // PTSH_PT_CORE_HPP
