#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pickett/metrics.hpp"
#include "pickett/params.hpp"
#include "pickett/solver.hpp"
#include "pickett/transient.hpp"

namespace pickett {

struct WidthRange {
  double min = 0.0;
  double max = 0.0;
};

/// Min/max of w_eff and w_raw over the samples (both zero for an empty trace).
WidthRange w_eff_range(const Trace& trace);
WidthRange w_raw_range(const Trace& trace);

/// Largest-magnitude current sample of a switching region: the OFF knee is
/// the maximum current at v > 0, the ON knee the minimum at v < 0.
struct Knee {
  double v = 0.0;
  double i = 0.0;
  double w_eff = 0.0;
};

std::optional<Knee> knee(const Trace& trace, Region region);

/// Original and modified runs of the same drive, with the modified trace
/// scored against the original one as reference.
struct CompareReport {
  Trace original;
  Trace modified;
  std::optional<double> discrepancy_on;
  std::optional<double> discrepancy_off;
  std::optional<double> discrepancy_full;
};

/// Runs both variants (concurrently) from `base`. Throws SimulationError if
/// either run fails.
CompareReport compare_variants(const ModelParams& base, const Waveform& drive,
                               const SolverConfig& cfg, double w0);

/// key = value summary of a comparison.
std::string format_compare(const CompareReport& report);

/// One boundary stress run.
struct BoundaryRun {
  std::string scenario;
  Variant variant = Variant::Modified;
  Trace trace;                  // partial when the run failed
  std::optional<std::string> failure;
  double failure_time = 0.0;    // s
  bool within_bounds = true;    // every w_eff sample inside [w_min, w_max]
};

/// The upper (fig3-ramp) and lower (fig4-ramp) stress drives on both
/// variants of `base`, run concurrently. Simulation failures are recorded in
/// the run rather than thrown.
std::vector<BoundaryRun> boundary_check(const ModelParams& base,
                                        const SolverConfig& cfg, double w0);

std::string format_boundary(const std::vector<BoundaryRun>& runs);

}  // namespace pickett
