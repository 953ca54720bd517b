#pragma once

#include <string>
#include <vector>

#include "pickett/metrics.hpp"
#include "pickett/params.hpp"
#include "pickett/solver.hpp"
#include "pickett/waveform.hpp"

namespace pickett {

/// A ModelParams field the fitter may move, with its box bounds.
struct FreeParameter {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
};

struct FitProblem {
  std::vector<FreeParameter> free_parameters;
  Region objective_region = Region::Full;
  ReferenceTrace reference;
  Waveform drive;            // drive the candidate models are simulated under
  double w0 = 1.2;           // nm
  int budget = 200;          // max objective evaluations

  /// Throws InvariantViolation for unknown names, unordered or non-finite
  /// bounds, or a non-positive budget.
  void validate() const;
};

struct FitResult {
  ModelParams params;
  double error = 0.0;
  int evaluations = 0;
  /// True when the budget ran out before the simplex collapsed; params and
  /// error still hold the best candidate seen.
  bool budget_exhausted = false;
  /// Best objective after each evaluation; non-increasing.
  std::vector<double> best_history;
};

/// Objective used by the fitter: relative RMS error between the simulated
/// candidate and the reference, or +inf when the candidate is invalid or
/// its simulation fails.
double fit_objective(const FitProblem& problem, const ModelParams& candidate,
                     const SolverConfig& cfg);

/// Box-constrained Nelder-Mead over the free parameters.
///
/// The start point is `base`. Vertex k of the initial simplex moves free
/// parameter k by +5% of its bound range (or -5% if that would leave the
/// box). Reflection 1, expansion 2, contraction 0.5, shrink 0.5; candidates
/// are clipped into the box. Deterministic for fixed inputs.
FitResult fit_parameters(const FitProblem& problem, const ModelParams& base,
                         const SolverConfig& cfg);

}  // namespace pickett
