#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "diabatic/errors.hpp"

namespace diabatic {

// Two-state Hamiltonian family H(s) = f(s) H0 + g(s) Hw with
// H0 = diag(eps0, eps1), Hw = coupling * (|0><1| + |1><0|),
// f(s) = s^k, g(s) = -(1-s)^m.  Units: hbar = 1, everything dimensionless.
struct ModelSpec {
  double eps0 = -1.0;
  double eps1 = +1.0;
  double coupling = 1.0;
  int f_exponent = 4;
  int g_exponent = 4;

  void validate() const {
    if (!(eps0 < eps1)) throw domain_error("ModelSpec: eps0 must be < eps1");
    if (f_exponent < 1 || g_exponent < 1)
      throw domain_error("ModelSpec: schedule exponents must be >= 1");
  }

  double f(double s) const { return std::pow(s, f_exponent); }
  double g(double s) const { return -std::pow(1.0 - s, g_exponent); }
  double f_prime(double s) const { return f_exponent * std::pow(s, f_exponent - 1); }
  double g_prime(double s) const { return g_exponent * std::pow(1.0 - s, g_exponent - 1); }
};

namespace detail {
inline void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw domain_error("s outside [0,1]: s=" + std::to_string(s));
}
}  // namespace detail

inline Eigen::Matrix2d hamiltonian_at(const ModelSpec& model, double s) {
  detail::check_s(s);
  const double f = model.f(s), g = model.g(s);
  Eigen::Matrix2d h;
  h << f * model.eps0, g * model.coupling, g * model.coupling, f * model.eps1;
  return h;
}

// Instantaneous eigensystem of H(s).  The frame is anchored at s = 1 where
// the adiabatic and computational bases coincide: eigvec_lower(1) = |0>,
// eigvec_upper(1) = |1>, and the branch is continuous in s.
struct AdiabaticFrame {
  double s = 0.0;
  double e_lower = 0.0;
  double e_upper = 0.0;
  double mixing_angle = 0.0;  // eigvec_lower = (cos th, sin th)
  Eigen::Vector2d eigvec_lower{1.0, 0.0};
  Eigen::Vector2d eigvec_upper{0.0, 1.0};
};

inline AdiabaticFrame eigensystem(const ModelSpec& model, double s) {
  detail::check_s(s);
  const double f = model.f(s);
  const double a = f * model.eps0, b = f * model.eps1;
  const double c = model.g(s) * model.coupling;
  const double mean = 0.5 * (a + b);
  const double delta = 0.5 * (a - b);  // <= 0 because eps0 < eps1 and f >= 0
  const double r = std::hypot(delta, c);

  AdiabaticFrame fr;
  fr.s = s;
  fr.e_lower = mean - r;
  fr.e_upper = mean + r;
  // tan(theta) = -c / (r - delta); r - delta >= r > 0 away from the fully
  // degenerate point, where atan2(0, 0) = 0 picks the computational frame.
  fr.mixing_angle = std::atan2(-c, r - delta);
  const double ct = std::cos(fr.mixing_angle), st = std::sin(fr.mixing_angle);
  fr.eigvec_lower << ct, st;
  fr.eigvec_upper << -st, ct;
  return fr;
}

// Radial coupling W(s) = <phi0(s)| d/ds |phi1(s)> = -d(theta)/ds.
// From tan(2 theta) = c/delta:  W = (c delta' - c' delta) / (2 r^2).
// Default model: W(s) = 2 s^3 (1-s)^3 / (s^8 + (1-s)^8), peak +4 at s = 1/2.
inline double coupling_w(const ModelSpec& model, double s) {
  detail::check_s(s);
  const double dlevel = 0.5 * (model.eps0 - model.eps1);
  const double delta = model.f(s) * dlevel;
  const double delta_p = model.f_prime(s) * dlevel;
  const double c = model.g(s) * model.coupling;
  const double c_p = model.g_prime(s) * model.coupling;
  const double r2 = delta * delta + c * c;
  if (r2 == 0.0) return 0.0;  // fully degenerate, decoupled by convention
  return (c * delta_p - c_p * delta) / (2.0 * r2);
}

namespace detail {

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace detail

// |integral of W over s in [0,1]| = |theta(1) - theta(0)|; pi/4 for the
// default model, independent of the coupling scale.
inline double coupling_surface(const ModelSpec& model) {
  return std::abs(detail::integrate([&](double s) { return coupling_w(model, s); }, 0.0, 1.0));
}

}  // namespace diabatic
