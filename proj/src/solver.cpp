#include "pickett/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

constexpr double kCurrentFloor = 1e-9;       // A
constexpr double kWarmupResistance = 1e4;    // ohm, cold-start guess
constexpr int kMaxDampingHalvings = 8;
constexpr int kMaxBisections = 400;
constexpr int kValidityBisections = 200;
constexpr double kSlopeStep = 1e-7;  // V

// Residual of the series equation in terms of the current magnitude x for a
// positive applied magnitude a: g(x) = x - I(a - r_s x). Increasing in x.
struct SeriesResidual {
  double a;
  double w;
  const ModelParams& p;

  double vg(double x) const { return a - p.r_s * x; }
  double operator()(double x) const { return x - tunnel_current(vg(x), w, p); }
};

std::string location(double v, double w) {
  std::ostringstream os;
  os.precision(10);
  os << "v=" << v << " V, w=" << w << " nm";
  return os.str();
}

}  // namespace

std::string_view to_string(OdeMethod m) {
  return m == OdeMethod::RK4 ? "rk4" : "euler";
}

std::optional<OdeMethod> parse_ode_method(std::string_view text) {
  if (text == "rk4") return OdeMethod::RK4;
  if (text == "euler") return OdeMethod::Euler;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(newton_tol > 0.0)) throw InvariantViolation("newton_tol", "must be > 0");
  if (newton_max_iter < 1) throw InvariantViolation("newton_max_iter", "must be >= 1");
  if (!(bisect_span > 0.0)) throw InvariantViolation("bisect_span", "must be > 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvariantViolation("dt", "must be > 0");
  if (substeps < 1) throw InvariantViolation("substeps", "must be >= 1");
}

double residual_bound(double i, const SolverConfig& cfg) noexcept {
  return cfg.newton_tol * std::max(std::abs(i), kCurrentFloor);
}

OperatingPoint solve_operating_point(double v, double w_eff,
                                     const ModelParams& params,
                                     const SolverConfig& cfg,
                                     std::optional<double> guess) {
  if (v == 0.0) {
    barrier_geometry(w_eff, 0.0, params);
    return {0.0, 0.0, 0.0};
  }
  if (params.r_s == 0.0) {
    return {v, tunnel_current(v, w_eff, params), v};
  }

  const double sign = v > 0.0 ? 1.0 : -1.0;
  const double a = std::abs(v);
  const SeriesResidual g{a, w_eff, params};
  // True while vg lies on the rising branch of the tunnelling current.
  auto rising = [&](double vg) {
    const double h = kSlopeStep * std::max(1.0, vg);
    if (!barrier_valid(w_eff, vg, params) || !barrier_valid(w_eff, vg + h, params)) return false;
    return tunnel_current(vg + h, w_eff, params) > tunnel_current(vg, w_eff, params);
  };
  auto result = [&](double x) {
    return OperatingPoint{v, sign * x, sign * g.vg(x)};
  };

  // Bracket [lo, hi] with g(lo) < 0 < g(hi). At x = a / r_s the barrier
  // sees no bias, so g(hi) = hi > 0. The tunnelling current rises with
  // barrier voltage up to a peak and then falls (and eventually the barrier
  // geometry breaks down); only the rising branch is physical, so lo is the
  // current at which the barrier voltage reaches that peak.
  double hi = a / params.r_s;
  double lo = 0.0;
  barrier_geometry(w_eff, 0.0, params);
  if (!rising(a)) {
    double good = 0.0;
    double bad = a;
    for (int k = 0; k < kValidityBisections; ++k) {
      const double mid = 0.5 * (good + bad);
      if (!(mid > good && mid < bad)) break;
      if (rising(mid)) good = mid;
      else bad = mid;
    }
    lo = (a - good) / params.r_s;
    if (g(lo) >= 0.0) {
      std::ostringstream os;
      os.precision(6);
      os << "no operating point: " << location(v, w_eff)
         << " exceeds the largest terminal voltage the barrier can carry ("
         << good + params.r_s * tunnel_current(good, w_eff, params) << " V)";
      throw NoConvergence(os.str());
    }
  }
  const double edge = lo;

  double g_lo = g(lo);
  if (g_lo == 0.0) return result(lo);
  if (lo + cfg.bisect_span < hi) {
    const double probe = lo + cfg.bisect_span;
    const double g_probe = g(probe);
    if (g_probe > 0.0) hi = probe;
    else lo = probe;
  }

  double x = guess && *guess * sign > 0.0 ? std::abs(*guess)
                                          : a / (params.r_s + kWarmupResistance);
  x = std::clamp(x, lo, hi);
  double gx = g(x);
  double best_x = x;
  double best_abs = std::abs(gx);

  auto converged = [&](double xx, double gg) {
    return std::abs(gg) <= residual_bound(xx, cfg);
  };
  auto tighten = [&](double xx, double gg) {
    if (gg < 0.0) lo = std::max(lo, xx);
    else hi = std::min(hi, xx);
    if (std::abs(gg) < best_abs) {
      best_abs = std::abs(gg);
      best_x = xx;
    }
  };

  for (int iter = 0; iter < cfg.newton_max_iter; ++iter) {
    if (converged(x, gx)) return result(x);
    tighten(x, gx);

    const double step_fd = std::max(kCurrentFloor, 1e-6 * x);
    double jac;
    if (x - step_fd >= edge) {
      jac = (g(x + step_fd) - g(x - step_fd)) / (2.0 * step_fd);
    } else {
      jac = (g(x + step_fd) - gx) / step_fd;
    }
    if (!(jac > 0.0) || !std::isfinite(jac)) break;

    double step = -gx / jac;
    bool accepted = false;
    for (int h = 0; h <= kMaxDampingHalvings; ++h, step *= 0.5) {
      const double xn = x + step;
      if (!(xn > lo && xn < hi)) continue;
      const double gn = g(xn);
      if (std::abs(gn) < std::abs(gx)) {
        x = xn;
        gx = gn;
        accepted = true;
        break;
      }
      tighten(xn, gn);
    }
    if (!accepted) break;  // stagnation: hand over to bisection
  }
  if (converged(x, gx)) return result(x);
  tighten(x, gx);

  for (int k = 0; k < kMaxBisections; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double gm = g(mid);
    if (converged(mid, gm)) return result(mid);
    tighten(mid, gm);
  }
  if (converged(best_x, g(best_x))) return result(best_x);
  throw NoConvergence("operating point did not converge at " + location(v, w_eff));
}

DeviceState advance_state(const DeviceState& state,
                          const OperatingPoint& op_point, double dt,
                          const ModelParams& params, const SolverConfig& cfg) {
  if (!(dt > 0.0)) throw InvariantViolation("dt", "must be > 0");

  double last_current = op_point.i;
  auto rate_at = [&](double w_raw) {
    const double w = clamp_width(w_raw, params);
    const OperatingPoint op =
        solve_operating_point(op_point.v, w, params, cfg, last_current);
    last_current = op.i;
    return state_derivative(w, op.i, op.v_g, params);
  };

  const double k1 = state_derivative(state.w_eff, op_point.i, op_point.v_g, params);
  double w_next;
  if (cfg.ode_method == OdeMethod::Euler) {
    w_next = state.w_raw + dt * k1;
  } else {
    const double k2 = rate_at(state.w_raw + 0.5 * dt * k1);
    const double k3 = rate_at(state.w_raw + 0.5 * dt * k2);
    const double k4 = rate_at(state.w_raw + dt * k3);
    w_next = state.w_raw + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  DeviceState next;
  next.w_eff = clamp_width(w_next, params);
  next.w_raw = params.clamped() ? next.w_eff : w_next;
  return next;
}

}  // namespace pickett
