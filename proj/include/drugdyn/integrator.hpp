#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "drugdyn/dynamics.hpp"
#include "drugdyn/params.hpp"

namespace drugdyn {

enum class Tier { Full, Exact4, Reduced };
enum class Method { FixedRK4, AdaptiveRK };
enum class TerminalReason { ReachedTMax, ConvergedToEquilibrium, StepFailure };

// Time scale used by the equilibrium stop test: we declare convergence when
// ||rhs||_inf * kCharacteristicTimeYears < equilibrium_stop_tol.
inline constexpr double kCharacteristicTimeYears = 1.0;

struct IntegratorOptions {
  Method method = Method::AdaptiveRK;
  double step = 0.0;      // fixed-step size in years (FixedRK4); <= 0 -> 0.01
  double abs_tol = -1.0;  // persons; < 0 -> 1e-8 * N
  double rel_tol = -1.0;  // < 0 -> 1e-8
  double t_max = 100.0;   // years
  // Persons. > 0: stop once ||rhs||_inf * characteristic_time drops below it.
  // == 0: never stop early. < 0: default 1e-6 * N.
  double equilibrium_stop_tol = -1.0;
  long max_steps = 2000000;
};

template <std::size_t Dim>
struct Trajectory {
  std::vector<double> times;                    // strictly increasing
  std::vector<std::array<double, Dim>> states;  // one per time stamp
  TerminalReason terminal = TerminalReason::ReachedTMax;
  long steps_taken = 0;
  long steps_rejected = 0;
  std::string failure;  // set when terminal == StepFailure

  bool empty() const { return times.empty(); }
  double terminal_time() const { return times.back(); }
  const std::array<double, Dim>& terminal_state() const { return states.back(); }
};

// Linear interpolation between samples; clamps outside the sampled range.
template <std::size_t Dim>
std::array<double, Dim> state_at(const Trajectory<Dim>& traj, double t);

namespace detail {

// Dormand-Prince 5(4) embedded pair.
struct Dopri5 {
  static constexpr std::size_t kStages = 7;
  static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static constexpr double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
  };
  // 5th-order weights (= last a row) and the 5th-minus-4th error weights.
  static constexpr double b[7] = {35.0 / 384,      0.0,          500.0 / 1113, 125.0 / 192,
                                  -2187.0 / 6784, 11.0 / 84,    0.0};
  static constexpr double e[7] = {35.0 / 384 - 5179.0 / 57600,
                                  0.0,
                                  500.0 / 1113 - 7571.0 / 16695,
                                  125.0 / 192 - 393.0 / 640,
                                  -2187.0 / 6784 + 92097.0 / 339200,
                                  11.0 / 84 - 187.0 / 2100,
                                  -1.0 / 40};
};

}  // namespace detail

// Integrates dx/dt = rhs(x) from x0 over [0, t_max]. n_total scales the
// default tolerances and the positivity threshold (components may undershoot
// zero by at most 1e-9 * N, and are clamped back to zero; a larger
// undershoot aborts with StepFailure). An optional stop predicate halts the
// integration after the first accepted sample for which it returns true.
template <std::size_t Dim, typename Rhs>
Trajectory<Dim> integrate_ode(
    Rhs&& rhs, const std::array<double, Dim>& x0, const IntegratorOptions& opts,
    double n_total,
    const std::function<bool(double, const std::array<double, Dim>&)>& stop = {});

// Tier wrappers.
Trajectory<5> integrate_full(const ValidatedParameters& p, const PopulationState& x0,
                             const IntegratorOptions& opts);
Trajectory<4> integrate_exact4(const ValidatedParameters& p, const Exact4State& x0,
                               const IntegratorOptions& opts);
Trajectory<2> integrate_reduced(const LVCoefficients& c, const ReducedState& x0,
                                const IntegratorOptions& opts);

// Cost of the steady-recovered-groups assumption: integrates the exact
// four-dimensional system and the reduced system from matching initial data
// and measures how far they drift apart.
struct ReductionError {
  double sup_d1 = 0.0;       // sup_t |D1_exact4(t) - D1_reduced(t)|, persons
  double sup_d2 = 0.0;
  double terminal_d1 = 0.0;  // same difference at the trajectories' ends
  double terminal_d2 = 0.0;
  double sup_r1_dev = 0.0;   // sup_t |R1(t) - gamma1 D1(t)/(delta1+mu)| on exact4
  double sup_r2_dev = 0.0;
  Trajectory<4> exact4;
  Trajectory<2> reduced;
};

ReductionError reduction_error(const ValidatedParameters& p, const Exact4State& x0,
                               const IntegratorOptions& opts);

const char* to_string(TerminalReason r);
const char* to_string(Tier t);
const char* to_string(Method m);

// ---------------------------------------------------------------------------
// template implementations

template <std::size_t Dim>
std::array<double, Dim> state_at(const Trajectory<Dim>& traj, double t) {
  const auto& ts = traj.times;
  if (t <= ts.front()) return traj.states.front();
  if (t >= ts.back()) return traj.states.back();
  // first sample with time > t
  std::size_t hi = 1;
  {
    std::size_t lo = 0, n = ts.size();
    while (lo + 1 < n && !(ts[lo] <= t && t < ts[lo + 1])) {
      std::size_t mid = lo + (n - lo) / 2;
      if (ts[mid] <= t)
        lo = mid;
      else
        n = mid;
    }
    hi = lo + 1;
  }
  const double t0 = ts[hi - 1], t1 = ts[hi];
  const double w = (t - t0) / (t1 - t0);
  std::array<double, Dim> out;
  for (std::size_t i = 0; i < Dim; ++i)
    out[i] = traj.states[hi - 1][i] + w * (traj.states[hi][i] - traj.states[hi - 1][i]);
  return out;
}

template <std::size_t Dim, typename Rhs>
Trajectory<Dim> integrate_ode(
    Rhs&& rhs, const std::array<double, Dim>& x0, const IntegratorOptions& opts,
    double n_total,
    const std::function<bool(double, const std::array<double, Dim>&)>& stop) {
  using State = std::array<double, Dim>;
  Trajectory<Dim> traj;

  const double abs_tol = opts.abs_tol < 0 ? 1e-8 * n_total : opts.abs_tol;
  const double rel_tol = opts.rel_tol < 0 ? 1e-8 : opts.rel_tol;
  const double stop_tol =
      opts.equilibrium_stop_tol < 0 ? 1e-6 * n_total : opts.equilibrium_stop_tol;
  const double eps_pos = 1e-9 * n_total;
  const double fixed_step = opts.step > 0 ? opts.step : 0.01;

  auto fail = [&](const std::string& why) {
    traj.terminal = TerminalReason::StepFailure;
    traj.failure = why;
    return traj;
  };

  if (!(opts.t_max > 0)) {
    traj.times.push_back(0.0);
    traj.states.push_back(x0);
    return fail("t_max must be positive");
  }
  if (opts.max_steps <= 0) {
    traj.times.push_back(0.0);
    traj.states.push_back(x0);
    return fail("max_steps must be positive");
  }
  if (opts.method == Method::FixedRK4 && !(opts.step > 0)) {
    traj.times.push_back(0.0);
    traj.states.push_back(x0);
    return fail("FixedRK4 requires a positive step");
  }

  auto inf_norm = [](const State& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };
  auto converged = [&](const State& f) {
    return stop_tol > 0 && inf_norm(f) * kCharacteristicTimeYears < stop_tol;
  };
  // Clamps roundoff-sized undershoots to zero; returns false when a component
  // is more negative than the threshold.
  auto enforce_positivity = [&](State& x) {
    for (double& v : x) {
      if (v < 0.0) {
        if (v < -eps_pos) return false;
        v = 0.0;
      }
    }
    return true;
  };

  double t = 0.0;
  State x = x0;
  if (!enforce_positivity(x)) return fail("initial state has a negative component");

  traj.times.push_back(t);
  traj.states.push_back(x);

  State f0 = rhs(x);
  if (converged(f0)) {
    traj.terminal = TerminalReason::ConvergedToEquilibrium;
    return traj;
  }
  if (stop && stop(t, x)) {
    traj.terminal = TerminalReason::ReachedTMax;
    return traj;
  }

  auto record = [&](double tn, const State& xn) {
    traj.times.push_back(tn);
    traj.states.push_back(xn);
  };

  if (opts.method == Method::FixedRK4) {
    while (t < opts.t_max) {
      if (traj.steps_taken >= opts.max_steps) return fail("max_steps exceeded");
      const double h = std::min(fixed_step, opts.t_max - t);
      State k1 = rhs(x), k2, k3, k4, xt;
      for (std::size_t i = 0; i < Dim; ++i) xt[i] = x[i] + 0.5 * h * k1[i];
      k2 = rhs(xt);
      for (std::size_t i = 0; i < Dim; ++i) xt[i] = x[i] + 0.5 * h * k2[i];
      k3 = rhs(xt);
      for (std::size_t i = 0; i < Dim; ++i) xt[i] = x[i] + h * k3[i];
      k4 = rhs(xt);
      State xn;
      for (std::size_t i = 0; i < Dim; ++i)
        xn[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!enforce_positivity(xn))
        return fail("positivity violated beyond the clamp threshold");
      t = (opts.t_max - t <= fixed_step) ? opts.t_max : t + h;
      x = xn;
      ++traj.steps_taken;
      record(t, x);
      State fn = rhs(x);
      if (converged(fn)) {
        traj.terminal = TerminalReason::ConvergedToEquilibrium;
        return traj;
      }
      if (stop && stop(t, x)) return traj;
    }
    traj.terminal = TerminalReason::ReachedTMax;
    return traj;
  }

  // Adaptive embedded pair with proportional step control: the per-step error
  // estimate must satisfy |e_i| <= abs_tol + rel_tol * |x_i| in every
  // component; a rejected step is halved, growth is capped at x5.
  using Tab = detail::Dopri5;
  double h;
  {
    const double d0 = inf_norm(x), d1 = inf_norm(f0);
    h = d1 > 0 ? 0.01 * (d0 > 0 ? d0 / d1 : 1.0 / d1) : opts.t_max / 10.0;
    h = std::min(std::max(h, 1e-6), opts.t_max / 10.0);
  }

  while (t < opts.t_max) {
    if (traj.steps_taken + traj.steps_rejected >= opts.max_steps)
      return fail("max_steps exceeded");
    h = std::min(h, opts.t_max - t);
    if (!(h > 1e-14 * std::max(1.0, std::abs(t))))
      return fail("step size underflow (tolerances unattainable)");

    std::array<State, Tab::kStages> k;
    k[0] = rhs(x);
    for (std::size_t s = 1; s < Tab::kStages; ++s) {
      State xs = x;
      for (std::size_t j = 0; j < s; ++j) {
        const double w = Tab::a[s][j];
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < Dim; ++i) xs[i] += h * w * k[j][i];
      }
      k[s] = rhs(xs);
    }

    State xn = x, err{};
    for (std::size_t s = 0; s < Tab::kStages; ++s) {
      for (std::size_t i = 0; i < Dim; ++i) {
        xn[i] += h * Tab::b[s] * k[s][i];
        err[i] += h * Tab::e[s] * k[s][i];
      }
    }

    double ratio = 0.0;  // max_i |e_i| / tolerance_i
    for (std::size_t i = 0; i < Dim; ++i) {
      const double tol_i = abs_tol + rel_tol * std::abs(xn[i]);
      ratio = std::max(ratio, std::abs(err[i]) / tol_i);
    }

    if (ratio > 1.0) {
      ++traj.steps_rejected;
      h *= 0.5;
      continue;
    }

    if (!enforce_positivity(xn))
      return fail("positivity violated beyond the clamp threshold");

    const bool final_step = (opts.t_max - t) <= h;
    t = final_step ? opts.t_max : t + h;
    x = xn;
    ++traj.steps_taken;
    record(t, x);

    State fn = rhs(x);
    if (converged(fn)) {
      traj.terminal = TerminalReason::ConvergedToEquilibrium;
      return traj;
    }
    if (stop && stop(t, x)) return traj;

    const double grow =
        ratio > 0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(ratio, -0.2))) : 5.0;
    h *= grow;
  }
  traj.terminal = TerminalReason::ReachedTMax;
  return traj;
}

}  // namespace drugdyn
