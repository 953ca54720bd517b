#pragma once

#include <optional>
#include <string_view>

#include "pickett/core_model.hpp"
#include "pickett/params.hpp"

namespace pickett {

enum class OdeMethod { RK4, Euler };

std::string_view to_string(OdeMethod m);
std::optional<OdeMethod> parse_ode_method(std::string_view text);

struct SolverConfig {
  double newton_tol = 1e-12;  // relative residual
  int newton_max_iter = 50;
  double bisect_span = 0.1;   // A; first bisection bracket above the lower end
  OdeMethod ode_method = OdeMethod::RK4;
  double dt = 1e-4;           // s
  int substeps = 10;          // integration steps per output sample

  void validate() const;

  bool operator==(const SolverConfig&) const = default;
};

/// Residual bound an operating point must meet: newton_tol * max(|i|, 1 nA).
double residual_bound(double i, const SolverConfig& cfg) noexcept;

/// Solves i = tunnel_current(v - r_s * i, w_eff) for the device current.
///
/// Damped Newton with a central finite-difference Jacobian, started from
/// `guess` (or v / (r_s + 10 kOhm)), safeguarded by a sign-changing bracket
/// in [0, v / r_s]. When Newton stagnates the remaining work is bisection.
/// Bias levels that would push the barrier outside its validity domain are
/// excluded from the bracket; if the root itself lies outside, the barrier
/// error is rethrown.
OperatingPoint solve_operating_point(double v, double w_eff,
                                     const ModelParams& params,
                                     const SolverConfig& cfg,
                                     std::optional<double> guess = std::nullopt);

/// One ODE step of length dt at the frozen terminal voltage op_point.v.
///
/// `op_point` must be the solved operating point for state.w_eff; it is
/// reused as the first stage. RK4 stages re-solve the operating point at
/// the clamped stage width. The clamp is applied once after the full step,
/// and in the modified variant w_raw is reset to the clamped value.
DeviceState advance_state(const DeviceState& state,
                          const OperatingPoint& op_point, double dt,
                          const ModelParams& params, const SolverConfig& cfg);

}  // namespace pickett
