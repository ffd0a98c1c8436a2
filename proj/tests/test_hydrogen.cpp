#include <catch_amalgamated.hpp>

#include "ptsh/hydrogen.hpp"
#include "ptsh/quadrature.hpp"

using namespace ptsh;
using Catch::Matchers::WithinAbs;

TEST_CASE("energy formulas") {
  CHECK(energy(1, 1.0) == -1.0);
  CHECK(energy(2, 1.0) == -0.25);
  CHECK_THAT(energy(3, 2.0), WithinAbs(-2.0 / 9.0, 1e-15));
  CHECK_THROWS_AS(energy(0, 1.0), std::domain_error);

  CHECK(energy_consistent(1, 1.0) == -0.5);
  CHECK(energy_consistent(2, 1.0) == -0.125);
  // the two formulas coincide only at Z = 2
  CHECK(energy(1, 2.0) == energy_consistent(1, 2.0));
}

TEST_CASE("quantum number validation") {
  CHECK_THROWS_AS((HydrogenState{1, 1, 0}), std::domain_error);
  CHECK_THROWS_AS((HydrogenState{2, 1, 2}), std::domain_error);
  CHECK_THROWS_AS((HydrogenState{2, 0, 0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(radial_wavefunction(2, 2, 1.0, 0.5), std::domain_error);
}

TEST_CASE("radial wavefunction normalization and behavior at the origin") {
  const auto g = hydrogen_radial_grid(3, 1.0);
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l) {
      const Complex norm = integrate_radial(
          [n, l](double r) {
            const double v = radial_wavefunction(n, l, 1.0, r);
            return Complex(v * v);
          },
          g);
      CHECK_THAT(std::abs(norm - 1.0), WithinAbs(0.0, 1e-10));
    }

  CHECK(radial_wavefunction(2, 1, 1.0, 0.0) == 0.0);
  CHECK(radial_wavefunction(3, 2, 1.0, 0.0) == 0.0);
  CHECK_THAT(radial_wavefunction(1, 0, 1.0, 0.0), WithinAbs(2.0, 1e-14));
}

TEST_CASE("R_30 has N - l - 1 = 2 radial nodes") {
  int sign_changes = 0;
  double prev = radial_wavefunction(3, 0, 1.0, 1e-3);
  for (double r = 0.05; r < 30.0; r += 0.02) {
    const double v = radial_wavefunction(3, 0, 1.0, r);
    if (prev * v < 0.0) ++sign_changes;
    prev = v;
  }
  CHECK(sign_changes == 2);
}

TEST_CASE("hydrogen_state: FD Schrodinger residual") {
  const FDStencil st(1e-3, 2);
  Lcg64 rng(71);
  for (const auto& s : {HydrogenState{1, 0, 0}, HydrogenState{2, 1, 1}, HydrogenState{3, 2, -1}}) {
    const auto psi = hydrogen_spatial_field(s);
    const auto h = coulomb_hamiltonian_op(1.0, st);
    const double e = energy_consistent(s.N, s.Z);
    for (int k = 0; k < 10; ++k) {
      const Vec3 x = rng.sphere_point(rng.uniform(0.5, 1.5 * s.N));
      CHECK_THAT(std::abs(h(psi)(x) - e * psi(x)), WithinAbs(0.0, 1e-4));
    }
  }
}

TEST_CASE("psi_100 is finite at the origin") {
  const Complex v = hydrogen_state({1, 0, 0}, {0.0, 0.3, 0.7});
  CHECK_THAT(std::abs(v), WithinAbs(2.0 / std::sqrt(4.0 * kPi), 1e-12));
}

TEST_CASE("orthonormality of a state pair by 3D quadrature") {
  const auto rg = hydrogen_radial_grid(3, 1.0);
  const auto sg = default_sphere_grid(4);
  const HydrogenState a{2, 0, 0}, b{3, 0, 0};

  auto inner = [&](const HydrogenState& s1, const HydrogenState& s2) {
    Complex acc = 0.0;
    for (std::size_t ir = 0; ir < rg.size(); ++ir) {
      const double r = rg.nodes[ir];
      const Complex ang = integrate_sphere(
          [&](double theta, double phi) {
            return std::conj(hydrogen_state(s1, {r, theta, phi})) *
                   hydrogen_state(s2, {r, theta, phi});
          },
          sg);
      acc += rg.weights[ir] * ang;
    }
    return acc;
  };
  CHECK_THAT(std::abs(inner(a, a) - 1.0), WithinAbs(0.0, 1e-8));
  CHECK_THAT(std::abs(inner(a, b)), WithinAbs(0.0, 1e-8));
}

TEST_CASE("pt_hydrogen_state reduces to hydrogen_state for the zero gauge") {
  const auto zero = make_zero_gauge();
  const HydrogenState s{2, 1, 0};
  const SphericalPoint p{1.3, 0.9, 2.1};
  CHECK(pt_hydrogen_state(zero, s, p) == hydrogen_state(s, p));
}

TEST_CASE("dressed Hamiltonian eigen-relation and route agreement") {
  const FDStencil st(1e-3, 2);
  const auto f = make_a_cos_theta_gauge(0.3);
  Lcg64 rng(73);

  for (const auto& s : {HydrogenState{1, 0, 0}, HydrogenState{2, 1, 0}}) {
    const auto psi_f = pt_hydrogen_spatial_field(f, s);
    const double e = energy_consistent(s.N, s.Z);
    const auto hf_explicit = dressed_hamiltonian_op(f, 1.0, st);
    const auto hf_conj = dressed_hamiltonian_conjugation_op(f, 1.0, st);
    for (int k = 0; k < 5; ++k) {
      const Vec3 x = rng.sphere_point(rng.uniform(0.5, 1.5 * s.N));
      const Complex v1 = hf_explicit(psi_f)(x);
      const Complex v2 = hf_conj(psi_f)(x);
      CHECK_THAT(std::abs(v1 - e * psi_f(x)), WithinAbs(0.0, 1e-4));
      CHECK_THAT(std::abs(v1 - v2), WithinAbs(0.0, 1e-5));
    }
  }

  // zero gauge: H_f is H
  const auto zero = make_zero_gauge();
  const auto psi = hydrogen_spatial_field({1, 0, 0});
  const Vec3 x{0.8, 0.1, 0.4};
  CHECK_THAT(std::abs(hf_apply_fd(zero, psi, x, st, 1.0) - energy_consistent(1, 1.0) * psi(x)),
             WithinAbs(0.0, 1e-4));
}

TEST_CASE("hf_apply_fd refuses points at the Coulomb singularity") {
  const FDStencil st(1e-2, 2);
  const auto psi = hydrogen_spatial_field({1, 0, 0});
  CHECK_THROWS_AS(hf_apply_fd(make_zero_gauge(), psi, Vec3{0.05, 0.0, 0.0}, st, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(runge_lenz_apply_fd(Axis::z, psi, Vec3{0.03, 0.02, 0.0}, st, 1.0),
                  std::domain_error);
}

TEST_CASE("R_z keeps psi_100 inside the N=1 eigenspace") {
  // H (R_z psi_100) = E_1 (R_z psi_100): nested FD, outer step 10x inner.
  const FDStencil inner(5e-3, 4), outer(5e-2, 4);
  const auto psi = hydrogen_spatial_field({1, 0, 0});
  const auto rz = runge_lenz_op(Axis::z, 1.0, inner);
  const auto h = coulomb_hamiltonian_op(1.0, outer);
  const double e1 = energy_consistent(1, 1.0);
  Lcg64 rng(79);
  for (int k = 0; k < 3; ++k) {
    const Vec3 x = rng.sphere_point(rng.uniform(0.8, 1.4));
    const Complex rp = rz(psi)(x);
    CHECK_THAT(std::abs(h(rz(psi))(x) - e1 * rp), WithinAbs(0.0, 1e-4));
  }
}

TEST_CASE("Runge-Lenz conservation, plain and dressed") {
  const double h_in = 5e-3;
  const FDStencil inner(h_in, 4), outer(10.0 * h_in, 4);
  const FDStencil inner2 = inner.halved(), outer2 = outer.halved();
  Lcg64 rng(83);
  const Vec3 c = rng.sphere_point(0.5);
  const SpatialField bump = [c](const Vec3& v) {
    const Vec3 d = v - c;
    return Complex(std::exp(-(d.x * d.x + d.y * d.y + d.z * d.z)));
  };
  const Vec3 x = rng.sphere_point(1.1);

  // f = 0: [R_i, H] -> 0
  {
    auto defect = [&](const FDStencil& so, const FDStencil& si) {
      const auto r_out = runge_lenz_op(Axis::x, 1.0, so);
      const auto r_in = runge_lenz_op(Axis::x, 1.0, si);
      const auto h_out = coulomb_hamiltonian_op(1.0, so);
      const auto h_in_op = coulomb_hamiltonian_op(1.0, si);
      return r_out(h_in_op(bump))(x) - h_out(r_in(bump))(x);
    };
    const Complex lim = richardson(defect(outer, inner), defect(outer2, inner2), 4);
    CHECK(std::abs(lim) < 1e-5);
  }

  // dressed pair: [R_fi, H_f] -> 0
  {
    const auto f = make_a_theta_gauge(0.5);
    auto defect = [&](const FDStencil& so, const FDStencil& si) {
      const auto r_out = dressed_runge_lenz_op(Axis::x, f, 1.0, so);
      const auto r_in = dressed_runge_lenz_op(Axis::x, f, 1.0, si);
      const auto h_out = dressed_hamiltonian_op(f, 1.0, so);
      const auto h_in_op = dressed_hamiltonian_op(f, 1.0, si);
      return r_out(h_in_op(bump))(x) - h_out(r_in(bump))(x);
    };
    const Complex lim = richardson(defect(outer, inner), defect(outer2, inner2), 4);
    CHECK(std::abs(lim) < 1e-5);
  }
}
