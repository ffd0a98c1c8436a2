#include <catch_amalgamated.hpp>

#include "ptsh/hydrogen.hpp"
#include "ptsh/quadrature.hpp"
#include "ptsh/special_functions.hpp"

using namespace ptsh;
using Catch::Matchers::WithinAbs;

TEST_CASE("gauss_legendre small rules") {
  const auto r1 = gauss_legendre(1);
  CHECK_THAT(r1.nodes[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(r1.weights[0], WithinAbs(2.0, 1e-15));

  const auto r2 = gauss_legendre(2);
  CHECK_THAT(r2.nodes[0], WithinAbs(-1.0 / std::sqrt(3.0), 1e-15));
  CHECK_THAT(r2.nodes[1], WithinAbs(1.0 / std::sqrt(3.0), 1e-15));
  CHECK_THAT(r2.weights[0], WithinAbs(1.0, 1e-15));
  CHECK_THAT(r2.weights[1], WithinAbs(1.0, 1e-15));

  CHECK_THROWS_AS(gauss_legendre(0), std::domain_error);
}

TEST_CASE("degree exactness: n-point rule integrates degree <= 2n-1 exactly") {
  for (const int n : {3, 5, 8, 13}) {
    const auto rule = gauss_legendre(n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double quad = 0.0;
      for (int i = 0; i < n; ++i) quad += rule.weights[i] * std::pow(rule.nodes[i], deg);
      const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
      CHECK_THAT(quad, WithinAbs(exact, 1e-13 * (1.0 + std::abs(exact))));
    }
  }
}

TEST_CASE("u^4 with n=3 gives 2/5") {
  const auto rule = gauss_legendre(3);
  double quad = 0.0;
  for (int i = 0; i < 3; ++i) quad += rule.weights[i] * std::pow(rule.nodes[i], 4);
  CHECK_THAT(quad, WithinAbs(0.4, 1e-14));
}

TEST_CASE("sphere grid measure and basic integrals") {
  const auto g = make_sphere_grid(12, 24);
  double total = 0.0;
  for (const double w : g.theta_weights) total += w * g.n_phi() * g.phi_weight;
  CHECK_THAT(total, WithinAbs(4.0 * kPi, 1e-12));

  CHECK_THAT(std::abs(integrate_sphere([](double, double) { return Complex(1.0); }, g) -
                      4.0 * kPi),
             WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(integrate_sphere(
                 [](double theta, double) { return Complex(std::cos(theta)); }, g)),
             WithinAbs(0.0, 1e-13));
  const Complex y22_norm = integrate_sphere(
      [](double theta, double phi) {
        return std::norm(spherical_harmonic({2, 2}, theta, phi)) * Complex(1.0);
      },
      g);
  CHECK_THAT(std::abs(y22_norm - 1.0), WithinAbs(0.0, 1e-12));
}

TEST_CASE("phi rule integrates e^{i m phi} exactly") {
  const auto g = make_sphere_grid(4, 9);
  for (int m = -6; m <= 6; ++m) {
    double acc_re = 0.0, acc_im = 0.0;
    for (const double phi : g.phi_nodes) {
      acc_re += std::cos(m * phi);
      acc_im += std::sin(m * phi);
    }
    const Complex integral = g.phi_weight * Complex(acc_re, acc_im);
    const Complex exact = (m % g.n_phi() == 0) ? 2.0 * kPi : 0.0;
    CHECK_THAT(std::abs(integral - exact), WithinAbs(0.0, 1e-14 * 2.0 * kPi));
  }
}

TEST_CASE("spectral convergence on e^{a cos theta}") {
  // int e^{a cos theta} dOmega = 4 pi sinh(a)/a
  const double a = 2.0;
  const double exact = 4.0 * kPi * std::sinh(a) / a;
  double prev_err = 1e300;
  for (const int n : {2, 4, 8, 16}) {
    const auto g = make_sphere_grid(n, 4);
    const Complex q = integrate_sphere(
        [a](double theta, double) { return Complex(std::exp(a * std::cos(theta))); }, g);
    const double err = std::abs(q - exact);
    CHECK(err <= prev_err + 1e-15);
    prev_err = err;
  }
  CHECK(prev_err < 1e-12);
}

TEST_CASE("sampled integration shape mismatch") {
  const auto g = make_sphere_grid(3, 4);
  std::vector<Complex> bad(5, 1.0);
  CHECK_THROWS_AS(integrate_sphere(bad, g), std::invalid_argument);
}

TEST_CASE("radial grid basics") {
  const auto g = make_radial_grid(40.0, 80);
  // int r^2 e^{-r} dr = 2
  const Complex m2 = integrate_radial(
      [](double r) { return Complex(std::exp(-r)); }, g);
  CHECK_THAT(std::abs(m2 - 2.0), WithinAbs(0.0, 1e-10));

  CHECK(std::abs(integrate_radial([](double) { return Complex(0.0); }, g)) == 0.0);

  // hydrogen ground state normalization, R_10 = 2 e^{-r}
  const Complex norm = integrate_radial(
      [](double r) {
        const double v = radial_wavefunction(1, 0, 1.0, r);
        return Complex(v * v);
      },
      g);
  CHECK_THAT(std::abs(norm - 1.0), WithinAbs(0.0, 1e-12));

  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  CHECK(g.nodes.front() > 0.0);

  std::vector<Complex> bad(3, 1.0);
  CHECK_THROWS_AS(integrate_radial(bad, g), std::invalid_argument);
}

TEST_CASE("hydrogen radial grid sanity moment") {
  const auto g = hydrogen_radial_grid(1, 1.0);
  const Complex m2 = integrate_radial([](double r) { return Complex(std::exp(-r)); }, g);
  CHECK_THAT(std::abs(m2 - 2.0), WithinAbs(0.0, 1e-10));
}
