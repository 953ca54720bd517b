#include "pickett/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pickett/errors.hpp"
#include "pickett/transient.hpp"

namespace pickett {

namespace {

constexpr double kInitialStep = 0.05;
constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
// Stop once the simplex spans less than this fraction of every bound range
// and the vertex objectives agree to within kValueTol (absolute).
constexpr double kSizeTol = 1e-6;
constexpr double kValueTol = 1e-6;

using Point = std::vector<double>;

struct Vertex {
  Point x;
  double f;
};

class Objective {
public:
  Objective(const FitProblem& problem, const ModelParams& base,
            const SolverConfig& cfg, FitResult& result)
      : problem_(problem), base_(base), cfg_(cfg), result_(result) {}

  ModelParams params_at(const Point& x) const {
    ModelParams p = base_;
    for (std::size_t k = 0; k < x.size(); ++k) {
      p.*find_param(problem_.free_parameters[k].name)->member = x[k];
    }
    return p;
  }

  bool exhausted() const { return result_.evaluations >= problem_.budget; }

  double operator()(const Point& x) {
    const double f = fit_objective(problem_, params_at(x), cfg_);
    ++result_.evaluations;
    if (result_.best_history.empty() || f < best_f_) {
      best_f_ = f;
      best_x_ = x;
    }
    result_.best_history.push_back(best_f_);
    return f;
  }

  const Point& best_x() const { return best_x_; }
  double best_f() const { return best_f_; }

private:
  const FitProblem& problem_;
  const ModelParams& base_;
  const SolverConfig& cfg_;
  FitResult& result_;
  Point best_x_;
  double best_f_ = std::numeric_limits<double>::infinity();
};

}  // namespace

void FitProblem::validate() const {
  if (budget < 1) throw InvariantViolation("budget", "must be >= 1");
  for (const auto& fp : free_parameters) {
    if (find_param(fp.name) == nullptr) {
      throw InvariantViolation(fp.name, "not a fittable model parameter");
    }
    if (!std::isfinite(fp.lower) || !std::isfinite(fp.upper) || !(fp.lower < fp.upper)) {
      throw InvariantViolation(fp.name, "bounds must be finite with lower < upper");
    }
  }
  drive.validate();
}

double fit_objective(const FitProblem& problem, const ModelParams& candidate,
                     const SolverConfig& cfg) {
  constexpr double kInfeasible = std::numeric_limits<double>::infinity();
  try {
    const Trace trace = simulate(problem.drive, candidate, cfg, problem.w0);
    const PairedSamples paired = align_traces(trace, problem.reference);
    const double e = rel_rms_error(paired, problem.objective_region);
    return std::isfinite(e) ? e : kInfeasible;
  } catch (const Error&) {
    return kInfeasible;
  }
}

FitResult fit_parameters(const FitProblem& problem, const ModelParams& base,
                         const SolverConfig& cfg) {
  problem.validate();
  const std::size_t n = problem.free_parameters.size();
  Point lower(n), upper(n), start(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& fp = problem.free_parameters[k];
    lower[k] = fp.lower;
    upper[k] = fp.upper;
    start[k] = base.*find_param(fp.name)->member;
    if (start[k] < fp.lower || start[k] > fp.upper) {
      throw InvariantViolation(fp.name, "start value outside its bounds");
    }
  }
  auto clip = [&](Point x) {
    for (std::size_t k = 0; k < n; ++k) x[k] = std::clamp(x[k], lower[k], upper[k]);
    return x;
  };

  FitResult result;
  Objective objective(problem, base, cfg, result);

  std::vector<Vertex> simplex;
  simplex.push_back({start, objective(start)});
  for (std::size_t k = 0; k < n && !objective.exhausted(); ++k) {
    Point x = start;
    const double step = kInitialStep * (upper[k] - lower[k]);
    x[k] = x[k] + step <= upper[k] ? x[k] + step : x[k] - step;
    simplex.push_back({x, objective(x)});
  }

  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  auto collapsed = [&] {
    if (!std::isfinite(simplex.front().f)) return false;
    if (std::abs(simplex.back().f - simplex.front().f) > kValueTol) return false;
    for (std::size_t k = 0; k < n; ++k) {
      double lo = simplex.front().x[k];
      double hi = lo;
      for (const auto& v : simplex) {
        lo = std::min(lo, v.x[k]);
        hi = std::max(hi, v.x[k]);
      }
      if (hi - lo > kSizeTol * (upper[k] - lower[k])) return false;
    }
    return true;
  };

  bool converged = n == 0;
  while (!converged && simplex.size() == n + 1 && !objective.exhausted()) {
    order();
    if (collapsed()) {
      converged = true;
      break;
    }
    Vertex& worst = simplex.back();
    Point centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[v].x[k] / static_cast<double>(n);
    }
    auto along = [&](const Point& from, double coeff) {
      Point x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coeff * (from[k] - centroid[k]);
      return clip(std::move(x));
    };

    Point xr = along(worst.x, -kReflect);
    const double fr = objective(xr);
    if (fr < simplex.front().f) {
      if (objective.exhausted()) {
        worst = {xr, fr};
        break;
      }
      Point xe = along(worst.x, -kExpand);
      const double fe = objective(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {xr, fr};
      continue;
    }
    if (objective.exhausted()) break;
    // Outside contraction toward the reflected point when it beat the worst
    // vertex, inside contraction otherwise.
    const bool outside = fr < worst.f;
    Point xc = along(outside ? xr : worst.x, kContract);
    const double fc = objective(xc);
    if (fc < std::min(fr, worst.f)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t v = 1; v <= n && !objective.exhausted(); ++v) {
      Point xs(n);
      for (std::size_t k = 0; k < n; ++k) {
        xs[k] = simplex[0].x[k] + kShrink * (simplex[v].x[k] - simplex[0].x[k]);
      }
      simplex[v] = {xs, objective(xs)};
    }
  }

  result.params = objective.params_at(objective.best_x());
  result.error = objective.best_f();
  result.budget_exhausted = !converged;
  return result;
}

}  // namespace pickett
