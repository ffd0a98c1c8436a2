#ifndef PTSH_OPERATORS_HPP
#define PTSH_OPERATORS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptsh/common.hpp"
#include "ptsh/gauge.hpp"
#include "ptsh/pt_core.hpp"
#include "ptsh/special_functions.hpp"

namespace ptsh {

// ---------------------------------------------------------------------------
// Matrix representation: angular momentum is block-diagonal in l.
// ---------------------------------------------------------------------------

/// Block-diagonal operator on HarmonicCoefficients; block l is (2l+1)x(2l+1)
/// over m = -l..l.
struct OperatorMatrix {
  int l_max = 0;
  std::vector<Eigen::MatrixXcd> blocks;

  explicit OperatorMatrix(int lmax = 0) : l_max(lmax) {
    blocks.reserve(lmax + 1);
    for (int l = 0; l <= lmax; ++l) blocks.emplace_back(Eigen::MatrixXcd::Zero(2 * l + 1, 2 * l + 1));
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& b : blocks) m = std::max(m, b.cwiseAbs().maxCoeff());
    return m;
  }

  HarmonicCoefficients apply(const HarmonicCoefficients& c) const {
    if (c.l_max != l_max) throw std::invalid_argument("OperatorMatrix::apply: l_max mismatch");
    HarmonicCoefficients out(l_max);
    for (int l = 0; l <= l_max; ++l) {
      Eigen::VectorXcd v(2 * l + 1);
      for (int m = -l; m <= l; ++m) v(m + l) = c.at(l, m);
      const Eigen::VectorXcd w = blocks[l] * v;
      for (int m = -l; m <= l; ++m) out.at(l, m) = w(m + l);
    }
    return out;
  }
};

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.l_max != b.l_max) throw std::invalid_argument("OperatorMatrix: l_max mismatch");
  OperatorMatrix out(a.l_max);
  for (int l = 0; l <= a.l_max; ++l) out.blocks[l] = a.blocks[l] * b.blocks[l];
  return out;
}

inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.l_max != b.l_max) throw std::invalid_argument("OperatorMatrix: l_max mismatch");
  OperatorMatrix out(a.l_max);
  for (int l = 0; l <= a.l_max; ++l) out.blocks[l] = a.blocks[l] - b.blocks[l];
  return out;
}

inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.l_max != b.l_max) throw std::invalid_argument("OperatorMatrix: l_max mismatch");
  OperatorMatrix out(a.l_max);
  for (int l = 0; l <= a.l_max; ++l) out.blocks[l] = a.blocks[l] + b.blocks[l];
  return out;
}

inline OperatorMatrix operator*(const Complex& s, const OperatorMatrix& a) {
  OperatorMatrix out(a.l_max);
  for (int l = 0; l <= a.l_max; ++l) out.blocks[l] = s * a.blocks[l];
  return out;
}

inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

enum class Axis { x = 0, y = 1, z = 2 };

/// L_x, L_y, L_z on the truncated harmonic basis via the ladder decomposition
/// L_x = (L+ + L-)/2, L_y = (L+ - L-)/(2i), ladder entries
/// sqrt(l(l+1) - m(m+-1)). Validated against the finite-difference picture
/// by verify_matrix_vs_fd.
inline OperatorMatrix build_angular_momentum(Axis axis, int l_max) {
  if (l_max < 0) throw std::domain_error("build_angular_momentum: l_max < 0");
  OperatorMatrix out(l_max);
  const Complex I(0.0, 1.0);
  for (int l = 0; l <= l_max; ++l) {
    auto& b = out.blocks[l];
    if (axis == Axis::z) {
      for (int m = -l; m <= l; ++m) b(m + l, m + l) = static_cast<double>(m);
      continue;
    }
    for (int m = -l; m < l; ++m) {
      // L+|l,m> = c |l,m+1>, L-|l,m+1> = c |l,m>
      const double c = std::sqrt(static_cast<double>(l) * (l + 1) - static_cast<double>(m) * (m + 1));
      if (axis == Axis::x) {
        b(m + 1 + l, m + l) += 0.5 * c;  // L+/2
        b(m + l, m + 1 + l) += 0.5 * c;  // L-/2
      } else {
        b(m + 1 + l, m + l) += -0.5 * I * c;  // L+/(2i)
        b(m + l, m + 1 + l) += 0.5 * I * c;   // -L-/(2i)... sign below
      }
    }
  }
  return out;
}

/// L^2 = Lx^2 + Ly^2 + Lz^2; block l equals l(l+1) I.
inline OperatorMatrix casimir(int l_max) {
  const auto lx = build_angular_momentum(Axis::x, l_max);
  const auto ly = build_angular_momentum(Axis::y, l_max);
  const auto lz = build_angular_momentum(Axis::z, l_max);
  return lx * lx + ly * ly + lz * lz;
}

/// sum c_lm Y_lm evaluated at a direction (undressed synthesis).
inline Complex synthesize(const HarmonicCoefficients& c, double theta, double phi) {
  Complex acc = 0.0;
  for (int l = 0; l <= c.l_max; ++l)
    for (int m = -l; m <= l; ++m) {
      const Complex a = c.at(l, m);
      if (a == Complex(0.0)) continue;
      acc += a * spherical_harmonic(HarmonicIndex(l, m), theta, phi);
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Finite-difference representation on 3-space.
// ---------------------------------------------------------------------------

/// Central finite-difference stencil; order 2 or 4.
struct FDStencil {
  double h = 1e-3;
  int order = 2;

  FDStencil() = default;
  FDStencil(double h_, int order_) : h(h_), order(order_) {
    if (h <= 0.0) throw std::domain_error("FDStencil: h must be > 0");
    if (order != 2 && order != 4) throw std::domain_error("FDStencil: order must be 2 or 4");
  }

  FDStencil halved() const { return FDStencil(0.5 * h, order); }
};

inline Complex fd_partial(const SpatialField& f, const Vec3& x, int axis, const FDStencil& st) {
  const double h = st.h;
  if (st.order == 2)
    return (f(shifted(x, axis, h)) - f(shifted(x, axis, -h))) / (2.0 * h);
  return (-f(shifted(x, axis, 2 * h)) + 8.0 * f(shifted(x, axis, h)) -
          8.0 * f(shifted(x, axis, -h)) + f(shifted(x, axis, -2 * h))) /
         (12.0 * h);
}

inline Complex fd_second(const SpatialField& f, const Vec3& x, int axis, const FDStencil& st) {
  const double h = st.h;
  if (st.order == 2)
    return (f(shifted(x, axis, h)) - 2.0 * f(x) + f(shifted(x, axis, -h))) / (h * h);
  return (-f(shifted(x, axis, 2 * h)) + 16.0 * f(shifted(x, axis, h)) - 30.0 * f(x) +
          16.0 * f(shifted(x, axis, -h)) - f(shifted(x, axis, -2 * h))) /
         (12.0 * h * h);
}

inline Complex fd_laplacian(const SpatialField& f, const Vec3& x, const FDStencil& st) {
  return fd_second(f, x, 0, st) + fd_second(f, x, 1, st) + fd_second(f, x, 2, st);
}

/// Operators as field transformers; composition gives nested FD application.
using SpatialOp = std::function<SpatialField(const SpatialField&)>;

/// p_j = -i d/dx_j.
inline SpatialOp momentum_op(int axis, FDStencil st) {
  return [axis, st](const SpatialField& f) -> SpatialField {
    return [axis, st, f](const Vec3& x) { return Complex(0.0, -1.0) * fd_partial(f, x, axis, st); };
  };
}

/// L_i = -i (x_a d_b - x_b d_a) with (i,a,b) cyclic.
inline SpatialOp angular_momentum_op(Axis axis, FDStencil st) {
  const int i = static_cast<int>(axis);
  const int a = (i + 1) % 3, b = (i + 2) % 3;
  return [a, b, st](const SpatialField& f) -> SpatialField {
    return [a, b, st, f](const Vec3& x) {
      return Complex(0.0, -1.0) *
             (component(x, a) * fd_partial(f, x, b, st) - component(x, b) * fd_partial(f, x, a, st));
    };
  };
}

/// Similarity transform of an operator: F -> e^f Op(e^{-f} F).
inline SpatialOp conjugate_op(const GaugeFunction& f, SpatialOp op) {
  return [f, op](const SpatialField& field) -> SpatialField {
    SpatialField damped = [f, field](const Vec3& x) {
      return std::exp(-f.eval_cartesian(x)) * field(x);
    };
    SpatialField inner = op(damped);
    return [f, inner](const Vec3& x) { return std::exp(f.eval_cartesian(x)) * inner(x); };
  };
}

/// Dressed momentum by the explicit formula p_f = p + i grad(f).
inline SpatialOp dressed_momentum_op(int axis, const GaugeFunction& f, FDStencil st) {
  return [axis, f, st](const SpatialField& field) -> SpatialField {
    return [axis, f, st, field](const Vec3& x) {
      const Complex pf = Complex(0.0, -1.0) * fd_partial(field, x, axis, st);
      return pf + Complex(0.0, 1.0) * f.gradient_cartesian(x)[axis] * field(x);
    };
  };
}

inline SpatialOp dressed_angular_momentum_op(Axis axis, const GaugeFunction& f, FDStencil st) {
  return conjugate_op(f, angular_momentum_op(axis, st));
}

// Pointwise wrappers.

inline Complex fd_apply_angular_momentum(Axis axis, const SpatialField& f, const Vec3& point,
                                         const FDStencil& st) {
  return angular_momentum_op(axis, st)(f)(point);
}

inline Complex fd_apply_dressed(Axis axis, const GaugeFunction& gauge, const SpatialField& f,
                                const Vec3& point, const FDStencil& st) {
  return dressed_angular_momentum_op(axis, gauge, st)(f)(point);
}

inline Complex fd_apply_dressed_momentum(int axis, const GaugeFunction& gauge,
                                         const SpatialField& f, const Vec3& point,
                                         const FDStencil& st) {
  return dressed_momentum_op(axis, gauge, st)(f)(point);
}

/// A spherical harmonic as a function of direction only (degree-0 homogeneous).
inline SpatialField harmonic_spatial_field(const HarmonicIndex& idx) {
  return [idx](const Vec3& x) {
    const auto p = SphericalPoint::from_cartesian(x);
    return spherical_harmonic(idx, p.theta, p.phi);
  };
}

/// Max over axes, (l,m) <= l_max and points of |FD application - matrix
/// application| of the angular momentum; ties the ladder matrices to the
/// differential definition.
inline double verify_matrix_vs_fd(int l_max, const std::vector<Vec3>& points,
                                  const FDStencil& st) {
  double worst = 0.0;
  for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const auto mat = build_angular_momentum(axis, l_max);
    for (int l = 0; l <= l_max; ++l)
      for (int m = -l; m <= l; ++m) {
        HarmonicCoefficients unit(l_max);
        unit.at(l, m) = 1.0;
        const HarmonicCoefficients image = mat.apply(unit);
        const SpatialField field = harmonic_spatial_field(HarmonicIndex(l, m));
        for (const auto& x : points) {
          const auto sp = SphericalPoint::from_cartesian(x);
          const Complex via_fd = fd_apply_angular_momentum(axis, field, x, st);
          const Complex via_matrix = synthesize(image, sp.theta, sp.phi);
          worst = std::max(worst, std::abs(via_fd - via_matrix));
        }
      }
  }
  return worst;
}

/// Richardson extrapolation to h -> 0 from values at h and h/2.
inline Complex richardson(const Complex& at_h, const Complex& at_h2, int order) {
  const double f = std::pow(2.0, order);
  return (f * at_h2 - at_h) / (f - 1.0);
}

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

/// Commutator defect ([L_fi, P_j] - i eps_ijk P_k) F at a point, where P is
/// either the plain or the dressed momentum. Evaluated at h and h/2 and
/// Richardson-extrapolated, so the truncation error cancels and the returned
/// magnitude estimates the true (h -> 0) defect.
struct RotationGeneratorDefect {
  double plain_momentum = 0.0;    // extrapolated defect of [L_fi, p_j]
  double dressed_momentum = 0.0;  // extrapolated defect of [L_fi, p_fj]
};

inline RotationGeneratorDefect verify_nonrotation_of_p(const GaugeFunction& gauge,
                                                       const std::vector<Vec3>& points,
                                                       const std::vector<SpatialField>& test_fns,
                                                       const FDStencil& st) {
  RotationGeneratorDefect out;
  const Complex I(0.0, 1.0);

  auto defect_at = [&](bool dressed, int i, int j, const SpatialField& f, const Vec3& x,
                       const FDStencil& s) {
    const SpatialOp li = dressed_angular_momentum_op(static_cast<Axis>(i), gauge, s);
    auto make_p = [&](int axis) {
      return dressed ? dressed_momentum_op(axis, gauge, s) : momentum_op(axis, s);
    };
    Complex val = li(make_p(j)(f))(x) - make_p(j)(li(f))(x);
    for (int k = 0; k < 3; ++k) {
      const int eps = levi_civita(i, j, k);
      if (eps != 0) val -= I * static_cast<double>(eps) * make_p(k)(f)(x);
    }
    return val;
  };

  for (const auto& f : test_fns)
    for (const auto& x : points)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          for (const bool dressed : {false, true}) {
            const Complex d_h = defect_at(dressed, i, j, f, x, st);
            const Complex d_h2 = defect_at(dressed, i, j, f, x, st.halved());
            const double lim = std::abs(richardson(d_h, d_h2, st.order));
            if (dressed)
              out.dressed_momentum = std::max(out.dressed_momentum, lim);
            else
              out.plain_momentum = std::max(out.plain_momentum, lim);
          }
        }
  return out;
}

/// Matrix of L_fi in the ordinary (Hermitian) inner product over the Y_lm
/// basis, M = int Y*_{l'm'} (L_i Y_lm - (L_i f) Y_lm) dOmega at radius 1.
/// Non-Hermitian for nonzero gauges; used to witness the Hermiticity
/// asymmetry of the dressed generators.
inline Eigen::MatrixXcd dressed_generator_gram(Axis axis, const GaugeFunction& gauge, int l_max,
                                               const SphereGrid& grid) {
  const int dim = (l_max + 1) * (l_max + 1);
  const auto lmat = build_angular_momentum(axis, l_max);
  const int i = static_cast<int>(axis);
  const int a = (i + 1) % 3, b = (i + 2) % 3;
  const Complex I(0.0, 1.0);

  Eigen::MatrixXcd out(dim, dim);
  for (int l = 0; l <= l_max; ++l)
    for (int m = -l; m <= l; ++m) {
      HarmonicCoefficients unit(l_max);
      unit.at(l, m) = 1.0;
      const HarmonicCoefficients image = lmat.apply(unit);
      // e^f L_i e^{-f} Y = L_i Y - (L_i f) Y, with L_i f from the analytic gradient.
      const SphericalField acted = [&, l, m](double theta, double phi) {
        const Vec3 x = SphericalPoint{1.0, theta, phi}.to_cartesian();
        const auto grad = gauge.gradient(1.0, theta, phi);
        const Complex lif = -I * (component(x, a) * grad[b] - component(x, b) * grad[a]);
        return synthesize(image, theta, phi) -
               lif * spherical_harmonic(HarmonicIndex(l, m), theta, phi);
      };
      for (int lp = 0; lp <= l_max; ++lp)
        for (int mp = -lp; mp <= lp; ++mp) {
          const Complex entry = integrate_sphere(
              [&](double theta, double phi) {
                return std::conj(spherical_harmonic(HarmonicIndex(lp, mp), theta, phi)) *
                       acted(theta, phi);
              },
              grid);
          out(static_cast<int>(HarmonicCoefficients::flat_index(lp, mp)),
              static_cast<int>(HarmonicCoefficients::flat_index(l, m))) = entry;
        }
    }
  return out;
}

}  // namespace ptsh

#endif  // PTSH_OPERATORS_HPP
