#ifndef PTSH_GAUGE_HPP
#define PTSH_GAUGE_HPP

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "ptsh/common.hpp"

namespace ptsh {

using ComplexVec3 = std::array<Complex, 3>;

/// The dressing function f of the similarity transform O -> e^f O e^{-f},
/// with its PT conjugate f*(r, pi-theta, phi+pi), Cartesian gradient and
/// Laplacian supplied analytically. Parameters are real; complexity enters
/// only through explicit factors of i in the built-in forms.
struct GaugeFunction {
  std::function<Complex(double r, double theta, double phi)> eval;
  std::function<Complex(double r, double theta, double phi)> pt_conjugate_eval;
  std::function<ComplexVec3(double r, double theta, double phi)> gradient;
  std::function<Complex(double r, double theta, double phi)> laplacian;
  std::string label;
  std::map<std::string, double> params;

  Complex operator()(double r, double theta, double phi) const { return eval(r, theta, phi); }

  Complex eval_cartesian(const Vec3& x) const {
    const auto p = SphericalPoint::from_cartesian(x);
    return eval(p.r, p.theta, p.phi);
  }

  ComplexVec3 gradient_cartesian(const Vec3& x) const {
    const auto p = SphericalPoint::from_cartesian(x);
    return gradient(p.r, p.theta, p.phi);
  }

  Complex laplacian_cartesian(const Vec3& x) const {
    const auto p = SphericalPoint::from_cartesian(x);
    return laplacian(p.r, p.theta, p.phi);
  }

  bool is_zero() const { return label == "zero"; }
};

namespace detail {

// grad(theta) = (cos theta cos phi, cos theta sin phi, -sin theta) / r
inline ComplexVec3 grad_theta(double r, double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  return {Complex(ct * std::cos(phi) / r), Complex(ct * std::sin(phi) / r), Complex(-st / r)};
}

// grad(phi) = (-sin phi, cos phi, 0) / (r sin theta)
inline ComplexVec3 grad_phi(double r, double theta, double phi) {
  const double s = r * std::sin(theta);
  return {Complex(-std::sin(phi) / s), Complex(std::cos(phi) / s), Complex(0.0)};
}

inline ComplexVec3 scale(const Complex& c, const ComplexVec3& v) {
  return {c * v[0], c * v[1], c * v[2]};
}

}  // namespace detail

inline GaugeFunction make_zero_gauge() {
  GaugeFunction f;
  f.label = "zero";
  f.eval = [](double, double, double) { return Complex(0.0); };
  f.pt_conjugate_eval = f.eval;
  f.gradient = [](double, double, double) { return ComplexVec3{0.0, 0.0, 0.0}; };
  f.laplacian = [](double, double, double) { return Complex(0.0); };
  return f;
}

/// f = a theta.  e^{f*(PT)+f} = e^{a pi}, so lambda = e^{a pi}.
inline GaugeFunction make_a_theta_gauge(double a) {
  GaugeFunction f;
  f.label = "a_theta";
  f.params["a"] = a;
  f.eval = [a](double, double theta, double) { return Complex(a * theta); };
  f.pt_conjugate_eval = [a](double, double theta, double) { return Complex(a * (kPi - theta)); };
  f.gradient = [a](double r, double theta, double phi) {
    return detail::scale(a, detail::grad_theta(r, theta, phi));
  };
  // laplacian(theta) = cot(theta) / r^2
  f.laplacian = [a](double r, double theta, double) {
    return Complex(a * std::cos(theta) / (std::sin(theta) * r * r));
  };
  return f;
}

/// f = a i sin(theta).  lambda = 1.
inline GaugeFunction make_ai_sin_theta_gauge(double a) {
  GaugeFunction f;
  f.label = "ai_sin_theta";
  f.params["a"] = a;
  f.eval = [a](double, double theta, double) { return Complex(0.0, a * std::sin(theta)); };
  f.pt_conjugate_eval = [a](double, double theta, double) {
    return Complex(0.0, -a * std::sin(kPi - theta));
  };
  f.gradient = [a](double r, double theta, double phi) {
    return detail::scale(Complex(0.0, a * std::cos(theta)), detail::grad_theta(r, theta, phi));
  };
  // lap(sin theta) = cos(2 theta) / (r^2 sin theta)
  f.laplacian = [a](double r, double theta, double) {
    return Complex(0.0, a * std::cos(2.0 * theta) / (r * r * std::sin(theta)));
  };
  return f;
}

/// f = a cos(theta).  lambda = 1.
inline GaugeFunction make_a_cos_theta_gauge(double a) {
  GaugeFunction f;
  f.label = "a_cos_theta";
  f.params["a"] = a;
  f.eval = [a](double, double theta, double) { return Complex(a * std::cos(theta)); };
  f.pt_conjugate_eval = [a](double, double theta, double) {
    return Complex(a * std::cos(kPi - theta));
  };
  f.gradient = [a](double r, double theta, double phi) {
    return detail::scale(-a * std::sin(theta), detail::grad_theta(r, theta, phi));
  };
  // lap(cos theta) = -2 cos(theta) / r^2
  f.laplacian = [a](double r, double theta, double) {
    return Complex(-2.0 * a * std::cos(theta) / (r * r));
  };
  return f;
}

/// f = a i phi.  lambda = e^{-i a pi}; the PT shift phi -> phi + pi is taken
/// literally, never reduced mod 2 pi.
inline GaugeFunction make_ai_phi_gauge(double a) {
  GaugeFunction f;
  f.label = "ai_phi";
  f.params["a"] = a;
  f.eval = [a](double, double, double phi) { return Complex(0.0, a * phi); };
  f.pt_conjugate_eval = [a](double, double, double phi) { return Complex(0.0, -a * (phi + kPi)); };
  f.gradient = [a](double r, double theta, double phi) {
    return detail::scale(Complex(0.0, a), detail::grad_phi(r, theta, phi));
  };
  f.laplacian = [](double, double, double) { return Complex(0.0); };
  return f;
}

inline GaugeFunction make_gauge(const std::string& name, double a) {
  if (name == "zero") return make_zero_gauge();
  if (name == "a_theta") return make_a_theta_gauge(a);
  if (name == "ai_sin_theta") return make_ai_sin_theta_gauge(a);
  if (name == "a_cos_theta") return make_a_cos_theta_gauge(a);
  if (name == "ai_phi") return make_ai_phi_gauge(a);
  throw std::invalid_argument("unknown gauge name: " + name);
}

/// Parses the gauge spec format "name:param=value", e.g. "a_theta:a=0.3".
/// "zero" takes no parameters.
inline GaugeFunction parse_gauge(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (colon == std::string::npos) {
    if (name == "zero") return make_zero_gauge();
    throw std::invalid_argument("gauge '" + name + "' requires a parameter, e.g. '" + name +
                                ":a=0.3'");
  }
  const std::string rest = spec.substr(colon + 1);
  const auto eq = rest.find('=');
  if (eq == std::string::npos || rest.substr(0, eq) != "a")
    throw std::invalid_argument("bad gauge parameter in '" + spec + "' (expected a=<real>)");
  std::size_t consumed = 0;
  double a = 0.0;
  try {
    a = std::stod(rest.substr(eq + 1), &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad gauge parameter value in '" + spec + "'");
  }
  if (consumed != rest.size() - eq - 1)
    throw std::invalid_argument("gauge parameter must be a real number in '" + spec + "'");
  return make_gauge(name, a);
}

}  // namespace ptsh

#endif  // PTSH_GAUGE_HPP
