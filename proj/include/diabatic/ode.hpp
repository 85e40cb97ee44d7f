#pragma once

#include <algorithm>
#include <cmath>

#include "diabatic/errors.hpp"

namespace diabatic::ode {

// Dormand-Prince 5(4) embedded pair with FSAL, PI-free step control.
// State is any Eigen fixed-size vector (real or complex); Rhs is
// void(double z, const State& y, State& dydz).

struct StepStats {
  long accepted = 0;
  long rejected = 0;
};

template <typename State, typename Rhs, typename Observer>
State integrate_dp54(Rhs&& rhs, State y, double z0, double z1, double rel_tol,
                     double abs_tol, long max_steps, StepStats& stats, Observer&& observe) {
  if (z1 == z0) return y;
  const double dir = (z1 > z0) ? 1.0 : -1.0;
  const double span = std::abs(z1 - z0);

  State k1, k2, k3, k4, k5, k6, k7, ytmp, y5, y4;
  rhs(z0, y, k1);
  double z = z0;
  double h = dir * std::min(span, std::max(1e-6, 1e-2 * span));

  while (dir * (z1 - z) > 0.0) {
    if (stats.accepted + stats.rejected >= max_steps)
      throw integration_error("integrator exhausted max_steps", z,
                              stats.accepted + stats.rejected);
    if (dir * (z + h - z1) > 0.0) h = z1 - z;

    ytmp = y + h * (1.0 / 5.0) * k1;
    rhs(z + h / 5.0, ytmp, k2);
    ytmp = y + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2);
    rhs(z + 3.0 * h / 10.0, ytmp, k3);
    ytmp = y + h * ((44.0 / 45.0) * k1 - (56.0 / 15.0) * k2 + (32.0 / 9.0) * k3);
    rhs(z + 4.0 * h / 5.0, ytmp, k4);
    ytmp = y + h * ((19372.0 / 6561.0) * k1 - (25360.0 / 2187.0) * k2 +
                    (64448.0 / 6561.0) * k3 - (212.0 / 729.0) * k4);
    rhs(z + 8.0 * h / 9.0, ytmp, k5);
    ytmp = y + h * ((9017.0 / 3168.0) * k1 - (355.0 / 33.0) * k2 +
                    (46732.0 / 5247.0) * k3 + (49.0 / 176.0) * k4 -
                    (5103.0 / 18656.0) * k5);
    rhs(z + h, ytmp, k6);
    y5 = y + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 -
                  (2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
    rhs(z + h, y5, k7);
    y4 = y + h * ((5179.0 / 57600.0) * k1 + (7571.0 / 16695.0) * k3 +
                  (393.0 / 640.0) * k4 - (92097.0 / 339200.0) * k5 +
                  (187.0 / 2100.0) * k6 + (1.0 / 40.0) * k7);

    double err2 = 0.0;
    for (int i = 0; i < y.size(); ++i) {
      const double sc =
          abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      const double e = std::abs(y5[i] - y4[i]) / sc;
      err2 += e * e;
    }
    const double err = std::sqrt(err2 / y.size());

    if (err <= 1.0) {
      z += h;
      y = y5;
      k1 = k7;  // FSAL
      ++stats.accepted;
      observe(z, y);
    } else {
      ++stats.rejected;
    }
    const double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(fac, 0.2, 5.0);
  }
  return y;
}

template <typename State, typename Rhs>
State integrate_dp54(Rhs&& rhs, State y, double z0, double z1, double rel_tol,
                     double abs_tol, long max_steps, StepStats& stats) {
  return integrate_dp54(std::forward<Rhs>(rhs), std::move(y), z0, z1, rel_tol,
                        abs_tol, max_steps, stats, [](double, const State&) {});
}

// Classical fixed-step RK4, used as the cross-validation route.
template <typename State, typename Rhs, typename Observer>
State integrate_rk4(Rhs&& rhs, State y, double z0, double z1, long n_steps,
                    Observer&& observe) {
  const double h = (z1 - z0) / n_steps;
  State k1, k2, k3, k4, ytmp;
  for (long i = 0; i < n_steps; ++i) {
    const double z = z0 + i * h;
    rhs(z, y, k1);
    ytmp = y + 0.5 * h * k1;
    rhs(z + 0.5 * h, ytmp, k2);
    ytmp = y + 0.5 * h * k2;
    rhs(z + 0.5 * h, ytmp, k3);
    ytmp = y + h * k3;
    rhs(z + h, ytmp, k4);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    observe(z + h, y);
  }
  return y;
}

template <typename State, typename Rhs>
State integrate_rk4(Rhs&& rhs, State y, double z0, double z1, long n_steps) {
  return integrate_rk4(std::forward<Rhs>(rhs), std::move(y), z0, z1, n_steps,
                       [](double, const State&) {});
}

}  // namespace diabatic::ode
