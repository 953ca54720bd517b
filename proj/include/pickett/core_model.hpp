#pragma once

#include "pickett/params.hpp"

namespace pickett {

/// Per-evaluation barrier quantities of the Simmons image-force model.
struct BarrierGeometry {
  double lambda_ = 0.0;  // eV
  double w1 = 0.0;       // nm
  double w2 = 0.0;       // nm
  double dw = 0.0;       // nm, w2 - w1
  double phi_i = 0.0;    // eV, lowered barrier height
  double b_exp = 0.0;    // b_coeff * dw, multiplies sqrt(eV)
};

/// Tunnel gap state. w_raw is what the integrator carries; w_eff is the
/// width every equation sees (clamped in the modified variant).
struct DeviceState {
  double w_raw = 1.2;
  double w_eff = 1.2;

  static DeviceState at(double w, const ModelParams& params);
};

/// Self-consistent terminal voltage / current / barrier voltage triple.
struct OperatingPoint {
  double v = 0.0;
  double i = 0.0;
  double v_g = 0.0;
};

/// Barrier geometry at width `w_eff` (nm) and barrier voltage `v_g` (V).
///
/// Throws DegenerateBarrier when w2 falls outside (w1, w_eff) and
/// NegativeBarrier when the lowered barrier height is not positive. Both mean
/// the bias/width pair lies outside the model's validity domain.
BarrierGeometry barrier_geometry(double w_eff, double v_g,
                                 const ModelParams& params);

/// Same as barrier_geometry but reports invalidity through the return value.
bool barrier_valid(double w_eff, double v_g, const ModelParams& params) noexcept;

/// Tunnelling current (A) through the barrier for barrier voltage v_g (V).
/// Odd in v_g; exactly zero at v_g = 0.
double tunnel_current(double v_g, double w_eff, const ModelParams& params);

/// dw/dt in nm/s. The branch is selected by the sign of v_g: OFF (w grows)
/// for v_g > 0, ON (w shrinks) for v_g < 0, zero at v_g = 0. Large sinh
/// arguments are handled in log space and the magnitude saturates at
/// kMaxRate instead of overflowing.
double state_derivative(double w_eff, double i, double v_g,
                        const ModelParams& params);

/// Saturation magnitude of state_derivative, nm/s.
inline constexpr double kMaxRate = 1e300;

/// Hard limiter: min(max(w, w_min), w_max) in the modified variant, identity
/// in the original.
double clamp_width(double w_raw, const ModelParams& params) noexcept;

}  // namespace pickett
