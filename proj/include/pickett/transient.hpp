#pragma once

#include <string>
#include <vector>

#include "pickett/errors.hpp"
#include "pickett/params.hpp"
#include "pickett/solver.hpp"
#include "pickett/waveform.hpp"

namespace pickett {

struct TraceSample {
  double t = 0.0;      // s
  double v = 0.0;      // V
  double v_g = 0.0;    // V
  double i = 0.0;      // A
  double w_eff = 0.0;  // nm
  double w_raw = 0.0;  // nm

  bool operator==(const TraceSample&) const = default;
};

/// Output of one transient run together with everything that produced it.
struct Trace {
  std::vector<TraceSample> samples;
  ModelParams params;
  SolverConfig solver;
  Waveform drive;
  double w0 = 1.2;

  bool empty() const noexcept { return samples.empty(); }
  std::size_t size() const noexcept { return samples.size(); }
};

/// A transient run failed. Carries the failing time and the samples
/// recorded before the failure, so callers can still inspect how far the
/// state got.
class SimulationError : public NumericalError {
public:
  SimulationError(double time, const std::string& cause, Trace partial);

  double time() const noexcept { return time_; }
  const Trace& partial() const noexcept { return partial_; }

private:
  double time_;
  Trace partial_;
};

/// Default initial tunnel width, nm.
inline constexpr double kDefaultW0 = 1.2;

/// Transient run of the drive over [0, t_end]. Samples are spaced
/// cfg.dt * cfg.substeps apart; the drive is held constant across each
/// integration step.
///
/// Throws InvariantViolation for invalid inputs (including a modified-model
/// w0 outside [w_min, w_max]) and SimulationError for numerical failures.
Trace simulate(const Waveform& wf, const ModelParams& params,
               const SolverConfig& cfg, double w0 = kDefaultW0);

struct IvPoint {
  double v = 0.0;
  double i = 0.0;
};

/// The trace projected onto the I-V plane, in time order.
std::vector<IvPoint> hysteresis_curve(const Trace& trace);

}  // namespace pickett
