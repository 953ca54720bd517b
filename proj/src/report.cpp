#include "pickett/report.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

std::optional<double> discrepancy(const Trace& model, const ReferenceTrace& ref,
                                  Region region) {
  try {
    return rel_rms_error(model, ref, region);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

void put(std::ostream& os, const std::string& key, const std::optional<double>& value) {
  os << key << " = ";
  if (value) os << *value;
  else os << "n/a";
  os << '\n';
}

BoundaryRun run_scenario(const Waveform& drive, ModelParams params,
                         Variant variant, const SolverConfig& cfg, double w0) {
  params.variant = variant;
  BoundaryRun run;
  run.scenario = drive.label;
  run.variant = variant;
  try {
    run.trace = simulate(drive, params, cfg, w0);
  } catch (const SimulationError& e) {
    run.trace = e.partial();
    run.failure = e.what();
    run.failure_time = e.time();
  }
  for (const auto& s : run.trace.samples) {
    if (s.w_eff < params.w_min || s.w_eff > params.w_max) run.within_bounds = false;
  }
  return run;
}

}  // namespace

WidthRange w_eff_range(const Trace& trace) {
  if (trace.empty()) return {};
  WidthRange r{trace.samples.front().w_eff, trace.samples.front().w_eff};
  for (const auto& s : trace.samples) {
    r.min = std::min(r.min, s.w_eff);
    r.max = std::max(r.max, s.w_eff);
  }
  return r;
}

WidthRange w_raw_range(const Trace& trace) {
  if (trace.empty()) return {};
  WidthRange r{trace.samples.front().w_raw, trace.samples.front().w_raw};
  for (const auto& s : trace.samples) {
    r.min = std::min(r.min, s.w_raw);
    r.max = std::max(r.max, s.w_raw);
  }
  return r;
}

std::optional<Knee> knee(const Trace& trace, Region region) {
  std::optional<Knee> best;
  for (const auto& s : trace.samples) {
    const bool take = region == Region::Off   ? s.v > 0.0 && (!best || s.i > best->i)
                      : region == Region::On  ? s.v < 0.0 && (!best || s.i < best->i)
                                              : !best || std::abs(s.i) > std::abs(best->i);
    if (take) best = Knee{s.v, s.i, s.w_eff};
  }
  return best;
}

CompareReport compare_variants(const ModelParams& base, const Waveform& drive,
                               const SolverConfig& cfg, double w0) {
  auto launch = [&](Variant v) {
    ModelParams p = base;
    p.variant = v;
    return std::async(std::launch::async, [p, &drive, &cfg, w0] {
      return simulate(drive, p, cfg, w0);
    });
  };
  auto original = launch(Variant::Original);
  auto modified = launch(Variant::Modified);

  CompareReport report;
  report.modified = modified.get();
  report.original = original.get();
  const ReferenceTrace ref = ReferenceTrace::from_trace(report.original);
  report.discrepancy_on = discrepancy(report.modified, ref, Region::On);
  report.discrepancy_off = discrepancy(report.modified, ref, Region::Off);
  report.discrepancy_full = discrepancy(report.modified, ref, Region::Full);
  return report;
}

std::string format_compare(const CompareReport& report) {
  std::ostringstream os;
  os << std::setprecision(10);
  const Waveform& d = report.modified.drive;
  os << "drive = " << d.label << " (" << to_string(d.kind) << ")\n";
  os << "samples = " << report.modified.size() << '\n';
  for (const Trace* t : {&report.original, &report.modified}) {
    const std::string name(to_string(t->params.variant));
    const WidthRange w = w_eff_range(*t);
    os << name << ".w_eff_min = " << w.min << '\n';
    os << name << ".w_eff_max = " << w.max << '\n';
    for (Region r : {Region::Off, Region::On}) {
      const auto k = knee(*t, r);
      os << name << ".knee_" << to_string(r) << " = ";
      if (k) os << k->v << " V, " << k->i << " A, w=" << k->w_eff << " nm\n";
      else os << "n/a\n";
    }
  }
  put(os, "discrepancy.on", report.discrepancy_on);
  put(os, "discrepancy.off", report.discrepancy_off);
  put(os, "discrepancy.full", report.discrepancy_full);
  return os.str();
}

std::vector<BoundaryRun> boundary_check(const ModelParams& base,
                                        const SolverConfig& cfg, double w0) {
  std::vector<std::future<BoundaryRun>> jobs;
  for (const Waveform& drive : {fig3_ramp(), fig4_ramp()}) {
    for (Variant v : {Variant::Modified, Variant::Original}) {
      jobs.push_back(std::async(std::launch::async, [drive, base, v, cfg, w0] {
        return run_scenario(drive, base, v, cfg, w0);
      }));
    }
  }
  std::vector<BoundaryRun> runs;
  for (auto& j : jobs) runs.push_back(j.get());
  return runs;
}

std::string format_boundary(const std::vector<BoundaryRun>& runs) {
  std::ostringstream os;
  os << std::setprecision(8);
  for (const auto& r : runs) {
    const WidthRange we = w_eff_range(r.trace);
    const WidthRange wr = w_raw_range(r.trace);
    os << r.scenario << ' ' << to_string(r.variant) << ": w_eff in [" << we.min << ", "
       << we.max << "] nm, w_raw in [" << wr.min << ", " << wr.max << "] nm, "
       << r.trace.size() << " samples";
    if (r.failure) os << ", stopped: " << *r.failure;
    else os << ", completed";
    if (r.variant == Variant::Modified) {
      os << (r.within_bounds ? ", within bounds" : ", OUT OF BOUNDS");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pickett
