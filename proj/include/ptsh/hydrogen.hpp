#ifndef PTSH_HYDROGEN_HPP
#define PTSH_HYDROGEN_HPP

#include <cmath>
#include <stdexcept>

#include "ptsh/common.hpp"
#include "ptsh/gauge.hpp"
#include "ptsh/operators.hpp"
#include "ptsh/special_functions.hpp"

namespace ptsh {

// Atomic units throughout: hbar = m = e = a_B = 1.

/// Bound-state labels (N, l, m) with nuclear charge Z.
struct HydrogenState {
  int N = 1;
  int l = 0;
  int m = 0;
  double Z = 1.0;

  HydrogenState() = default;
  HydrogenState(int N_, int l_, int m_, double Z_ = 1.0) : N(N_), l(l_), m(m_), Z(Z_) {
    if (N < 1 || l < 0 || l > N - 1 || std::abs(m) > l || Z <= 0.0)
      throw std::domain_error("HydrogenState: invalid quantum numbers");
  }
};

/// E_N = -Z e^2 / (a_B N^2) -> -Z/N^2 in atomic units (the source formula,
/// reported as-is; see energy_consistent for the value the Hamiltonian
/// H = p^2/2 - Z/r actually produces).
inline double energy(int N, double Z) {
  if (N < 1) throw std::domain_error("energy: N < 1");
  if (Z <= 0.0) throw std::domain_error("energy: Z <= 0");
  return -Z / (static_cast<double>(N) * N);
}

/// Eigenvalue of H = p^2/2 - Z/r: E_N = -Z^2/(2 N^2).
inline double energy_consistent(int N, double Z) {
  if (N < 1) throw std::domain_error("energy_consistent: N < 1");
  if (Z <= 0.0) throw std::domain_error("energy_consistent: Z <= 0");
  return -Z * Z / (2.0 * static_cast<double>(N) * N);
}

/// rho = alpha r with alpha = 2 sqrt(-2 E); for the consistent E this is 2Z/N.
inline double rho_scale(int N, double Z) { return 2.0 * std::sqrt(-2.0 * energy_consistent(N, Z)); }

/// R_Nl(r) = (2/N^2) sqrt(Z^3 (N-l-1)!/(N+l)!) rho^l L_{N-l-1}^{2l+1}(rho) e^{-rho/2}.
inline double radial_wavefunction(int N, int l, double Z, double r) {
  if (N < 1 || l < 0 || l > N - 1) throw std::domain_error("radial_wavefunction: invalid N, l");
  if (r < 0.0) throw std::domain_error("radial_wavefunction: r < 0");
  double fac = 1.0;  // (N-l-1)!/(N+l)!
  for (int k = N - l; k <= N + l; ++k) fac /= k;
  const double norm = 2.0 / (static_cast<double>(N) * N) * std::sqrt(Z * Z * Z * fac);
  const double rho = rho_scale(N, Z) * r;
  return norm * std::pow(rho, l) * laguerre(N - l - 1, 2 * l + 1, rho) * std::exp(-0.5 * rho);
}

inline Complex hydrogen_state(const HydrogenState& s, const SphericalPoint& p) {
  return radial_wavefunction(s.N, s.l, s.Z, p.r) *
         spherical_harmonic(HarmonicIndex(s.l, s.m), p.theta, p.phi);
}

inline SpatialField hydrogen_spatial_field(const HydrogenState& s) {
  return [s](const Vec3& x) { return hydrogen_state(s, SphericalPoint::from_cartesian(x)); };
}

/// psi_fNlm = e^f psi_Nlm.
inline Complex pt_hydrogen_state(const GaugeFunction& f, const HydrogenState& s,
                                 const SphericalPoint& p) {
  return std::exp(f.eval(p.r, p.theta, p.phi)) * hydrogen_state(s, p);
}

inline SpatialField pt_hydrogen_spatial_field(const GaugeFunction& f, const HydrogenState& s) {
  return [f, s](const Vec3& x) {
    return pt_hydrogen_state(f, s, SphericalPoint::from_cartesian(x));
  };
}

/// H = p^2/2 - Z/r via FD Laplacian.
inline SpatialOp coulomb_hamiltonian_op(double Z, FDStencil st) {
  return [Z, st](const SpatialField& f) -> SpatialField {
    return [Z, st, f](const Vec3& x) {
      return -0.5 * fd_laplacian(f, x, st) - Z / x.norm() * f(x);
    };
  };
}

/// H_f by the explicit formula
/// H_f = 1/2 (p^2 + 2 i grad(f).p + lap(f) - grad(f)^2) - Z/r,
/// with analytic grad(f), lap(f) and FD derivatives of the field.
inline SpatialOp dressed_hamiltonian_op(const GaugeFunction& gauge, double Z, FDStencil st) {
  return [gauge, Z, st](const SpatialField& f) -> SpatialField {
    return [gauge, Z, st, f](const Vec3& x) {
      const Complex I(0.0, 1.0);
      const auto grad = gauge.gradient_cartesian(x);
      Complex grad_dot_p = 0.0;
      Complex grad_sq = 0.0;
      for (int j = 0; j < 3; ++j) {
        grad_dot_p += grad[j] * (-I) * fd_partial(f, x, j, st);
        grad_sq += grad[j] * grad[j];
      }
      const Complex p2 = -fd_laplacian(f, x, st);
      return 0.5 * (p2 + 2.0 * I * grad_dot_p +
                    (gauge.laplacian_cartesian(x) - grad_sq) * f(x)) -
             Z / x.norm() * f(x);
    };
  };
}

/// Second route for H_f: e^f H (e^{-f} F). Must agree with the explicit
/// formula to the stencil order.
inline SpatialOp dressed_hamiltonian_conjugation_op(const GaugeFunction& gauge, double Z,
                                                    FDStencil st) {
  return conjugate_op(gauge, coulomb_hamiltonian_op(Z, st));
}

inline void check_singularity(const Vec3& point, const FDStencil& st) {
  if (point.norm() <= 10.0 * st.h)
    throw std::domain_error("FD evaluation too close to the Coulomb singularity");
}

inline Complex hf_apply_fd(const GaugeFunction& gauge, const SpatialField& f, const Vec3& point,
                           const FDStencil& st, double Z) {
  check_singularity(point, st);
  return dressed_hamiltonian_op(gauge, Z, st)(f)(point);
}

/// Runge-Lenz component R_i = 1/2 (L x p - p x L)_i + Z x_i / r via nested FD.
/// The Coulomb coefficient is fixed by [R_i, H] = 0 for H = p^2/2 - Z/r.
inline SpatialOp runge_lenz_op(Axis axis, double Z, FDStencil st) {
  const int i = static_cast<int>(axis);
  return [i, Z, st](const SpatialField& f) -> SpatialField {
    return [i, Z, st, f](const Vec3& x) {
      Complex acc = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int eps = levi_civita(i, j, k);
          if (eps == 0) continue;
          const SpatialOp lj = angular_momentum_op(static_cast<Axis>(j), st);
          const SpatialOp pk = momentum_op(k, st);
          // (L x p)_i - (p x L)_i = eps_ijk (L_j p_k - p_j L_k)
          const SpatialOp pj = momentum_op(j, st);
          const SpatialOp lk = angular_momentum_op(static_cast<Axis>(k), st);
          acc += static_cast<double>(eps) * (lj(pk(f))(x) - pj(lk(f))(x));
        }
      return 0.5 * acc + Z * component(x, i) / x.norm() * f(x);
    };
  };
}

inline Complex runge_lenz_apply_fd(Axis axis, const SpatialField& f, const Vec3& point,
                                   const FDStencil& st, double Z) {
  check_singularity(point, st);
  return runge_lenz_op(axis, Z, st)(f)(point);
}

/// R_fi = e^f R_i e^{-f}.
inline SpatialOp dressed_runge_lenz_op(Axis axis, const GaugeFunction& gauge, double Z,
                                       FDStencil st) {
  return conjugate_op(gauge, runge_lenz_op(axis, Z, st));
}

}  // namespace ptsh

#endif  // PTSH_HYDROGEN_HPP
