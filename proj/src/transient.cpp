#include "pickett/transient.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace pickett {

namespace {

std::string at_time(double t, const std::string& cause) {
  std::ostringstream os;
  os.precision(10);
  os << "t=" << t << " s: " << cause;
  return os.str();
}

}  // namespace

SimulationError::SimulationError(double time, const std::string& cause,
                                 Trace partial)
    : NumericalError(at_time(time, cause)), time_(time), partial_(std::move(partial)) {}

Trace simulate(const Waveform& wf, const ModelParams& params,
               const SolverConfig& cfg, double w0) {
  params.validate();
  cfg.validate();
  wf.validate();
  if (!std::isfinite(w0) || !(w0 > params.w1_const)) {
    throw InvariantViolation("w0", "must exceed w1_const");
  }
  if (params.clamped() && (w0 < params.w_min || w0 > params.w_max)) {
    throw InvariantViolation("w0", "must lie in [w_min, w_max] for the modified model");
  }

  Trace trace;
  trace.params = params;
  trace.solver = cfg;
  trace.drive = wf;
  trace.w0 = w0;

  const double h_out = cfg.dt * cfg.substeps;
  const auto n_out = static_cast<long long>(std::floor(wf.t_end / h_out * (1.0 + 1e-12)));
  trace.samples.reserve(static_cast<std::size_t>(n_out) + 1);

  DeviceState state = DeviceState::at(w0, params);
  std::optional<double> warm;
  double t = 0.0;
  try {
    for (long long k = 0; k <= n_out; ++k) {
      t = std::min(static_cast<double>(k) * h_out, wf.t_end);
      const double v = sample_waveform(wf, t);
      OperatingPoint op = solve_operating_point(v, state.w_eff, params, cfg, warm);
      warm = op.i;
      trace.samples.push_back({t, v, op.v_g, op.i, state.w_eff, state.w_raw});
      if (k == n_out) break;

      for (int s = 0; s < cfg.substeps; ++s) {
        if (s > 0) {
          t = std::min(static_cast<double>(k) * h_out + s * cfg.dt, wf.t_end);
          const double vs = sample_waveform(wf, t);
          op = solve_operating_point(vs, state.w_eff, params, cfg, warm);
          warm = op.i;
        }
        state = advance_state(state, op, cfg.dt, params, cfg);
      }
    }
  } catch (const NumericalError& e) {
    throw SimulationError(t, e.what(), std::move(trace));
  }
  return trace;
}

std::vector<IvPoint> hysteresis_curve(const Trace& trace) {
  if (trace.empty()) throw EmptyTrace("hysteresis_curve: trace has no samples");
  std::vector<IvPoint> curve;
  curve.reserve(trace.size());
  for (const auto& s : trace.samples) curve.push_back({s.v, s.i});
  return curve;
}

}  // namespace pickett
