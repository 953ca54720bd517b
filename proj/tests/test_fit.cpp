#include <doctest.h>

#include <cmath>

#include "pickett/errors.hpp"
#include "pickett/fit.hpp"

using namespace pickett;

namespace {

SolverConfig coarse() {
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.substeps = 1;
  return cfg;
}

// OFF-switching parameters are scored on the OFF region. On the full loop a
// slightly slower OFF switch lets the ON half run away, which puts a cliff
// in the objective right next to the true value.
FitProblem synthetic_problem(std::vector<FreeParameter> free, int budget = 200) {
  FitProblem problem;
  problem.free_parameters = std::move(free);
  problem.objective_region = Region::Off;
  problem.drive = fig2_drive();
  problem.reference =
      ReferenceTrace::from_trace(simulate(problem.drive, ModelParams{}, coarse()));
  problem.budget = budget;
  return problem;
}

bool non_increasing(const std::vector<double>& h) {
  for (std::size_t k = 1; k < h.size(); ++k) {
    if (h[k] > h[k - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("objective is zero at the generating parameters") {
  const auto problem = synthetic_problem({{"i_off", 50e-6, 300e-6}});
  CHECK(fit_objective(problem, ModelParams{}, coarse()) == 0.0);
}

TEST_CASE("objective is infinite when the candidate cannot be simulated") {
  const auto problem = synthetic_problem({{"i_off", 50e-6, 300e-6}});
  ModelParams bad;
  bad.w_min = 5.0;
  CHECK(std::isinf(fit_objective(problem, bad, coarse())));
}

TEST_CASE("budget of one returns the start point") {
  const auto problem = synthetic_problem({{"i_off", 50e-6, 300e-6}}, 1);
  ModelParams start;
  start.i_off = 1.3 * 115e-6;
  const auto result = fit_parameters(problem, start, coarse());
  CHECK(result.evaluations == 1);
  CHECK(result.budget_exhausted);
  CHECK(result.params == start);
  CHECK(result.error == fit_objective(problem, start, coarse()));
}

TEST_CASE("recovers i_off from a 30% perturbed start") {
  const auto problem = synthetic_problem({{"i_off", 115e-6 / 4, 115e-6 * 4}});
  ModelParams start;
  start.i_off = 1.3 * 115e-6;
  const double start_error = fit_objective(problem, start, coarse());
  const auto result = fit_parameters(problem, start, coarse());
  CHECK(result.evaluations <= 200);
  CHECK(std::fabs(result.params.i_off - 115e-6) <= 0.05 * 115e-6);
  CHECK(result.error <= start_error);
  CHECK(non_increasing(result.best_history));
  CHECK(result.best_history.size() == static_cast<std::size_t>(result.evaluations));
}

TEST_CASE("recovers k_off2 from 1.0") {
  const auto problem = synthetic_problem({{"k_off2", 0.1, 2.0}});
  ModelParams start;
  start.k_off2 = 1.0;
  const auto result = fit_parameters(problem, start, coarse());
  CHECK(result.evaluations <= 200);
  CHECK(result.params.k_off2 >= 0.4);
  CHECK(result.params.k_off2 <= 0.6);
  CHECK(non_increasing(result.best_history));
}

TEST_CASE("two free parameters") {
  const auto problem = synthetic_problem({{"i_off", 30e-6, 400e-6}, {"k_off2", 0.1, 2.0}}, 60);
  ModelParams start;
  start.i_off = 140e-6;
  start.k_off2 = 0.7;
  const double start_error = fit_objective(problem, start, coarse());
  const auto result = fit_parameters(problem, start, coarse());
  CHECK(result.evaluations <= 60);
  CHECK(result.error < start_error);
  CHECK(result.params.i_off >= 30e-6);
  CHECK(result.params.i_off <= 400e-6);
  CHECK(non_increasing(result.best_history));
}

TEST_CASE("fit problem validation") {
  ModelParams start;
  auto problem = synthetic_problem({{"i_off", 200e-6, 300e-6}});
  CHECK_THROWS_AS(fit_parameters(problem, start, coarse()), InvariantViolation);
  problem.free_parameters = {{"nope", 0.0, 1.0}};
  CHECK_THROWS_AS(problem.validate(), InvariantViolation);
  problem.free_parameters = {{"i_off", 2.0, 1.0}};
  CHECK_THROWS_AS(problem.validate(), InvariantViolation);
  problem.free_parameters = {{"i_off", 0.0, 1.0}};
  problem.budget = 0;
  CHECK_THROWS_AS(problem.validate(), InvariantViolation);
}

TEST_CASE("fitting is deterministic") {
  const auto problem = synthetic_problem({{"i_off", 50e-6, 300e-6}}, 15);
  ModelParams start;
  start.i_off = 150e-6;
  const auto a = fit_parameters(problem, start, coarse());
  const auto b = fit_parameters(problem, start, coarse());
  CHECK(a.params == b.params);
  CHECK(a.best_history == b.best_history);
}
