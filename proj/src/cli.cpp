#include "pickett/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "pickett/config.hpp"
#include "pickett/csv.hpp"
#include "pickett/errors.hpp"
#include "pickett/fit.hpp"
#include "pickett/metrics.hpp"
#include "pickett/report.hpp"
#include "pickett/transient.hpp"

namespace pickett::cli {

namespace {

constexpr int kDigits = std::numeric_limits<double>::max_digits10;

RunConfig load_and_echo(const std::string& path, std::ostream& err) {
  RunConfig cfg = load_config(path);
  err << "# settings from " << path << '\n' << format_provenance(cfg);
  return cfg;
}

Region region_or_throw(const std::string& text) {
  auto r = parse_region(text);
  if (!r) throw ConfigError("--region must be on, off or full");
  return *r;
}

// name, name:lo:hi; default bounds [base/4, 4*base] for positive values.
std::vector<FreeParameter> parse_free(const std::string& text, const ModelParams& base) {
  std::vector<FreeParameter> out;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream fields(item);
    std::string f;
    while (std::getline(fields, f, ':')) parts.push_back(f);
    const ParamField* field = find_param(parts[0]);
    if (field == nullptr) throw UnknownKey("--free: unknown parameter '" + parts[0] + "'");
    FreeParameter fp{parts[0], 0.0, 0.0};
    if (parts.size() == 3) {
      try {
        fp.lower = std::stod(parts[1]);
        fp.upper = std::stod(parts[2]);
      } catch (const std::exception&) {
        throw ConfigError("--free: bad bounds in '" + item + "'");
      }
    } else if (parts.size() == 1) {
      const double v = base.*field->member;
      if (!(v > 0.0)) throw ConfigError("--free: give explicit bounds for '" + parts[0] + "'");
      fp.lower = v / 4.0;
      fp.upper = v * 4.0;
    } else {
      throw ConfigError("--free: expected name or name:lo:hi, got '" + item + "'");
    }
    out.push_back(fp);
  }
  if (out.empty()) throw ConfigError("--free: no parameters given");
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

int cmd_simulate(const std::string& config_path, std::string output,
                 std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_and_echo(config_path, err);
  if (output.empty()) output = cfg.output;
  const Trace trace = simulate(cfg.drive, cfg.model, cfg.solver, cfg.w0);
  if (output.empty() || output == "-") {
    write_trace_csv(out, trace);
  } else {
    save_trace_csv(output, trace);
    err << "wrote " << trace.size() << " samples to " << output << '\n';
  }
  return kOk;
}

int cmd_compare(const std::string& config_path, const std::string& dir,
                std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_and_echo(config_path, err);
  const CompareReport report = compare_variants(cfg.model, cfg.drive, cfg.solver, cfg.w0);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
  const std::filesystem::path base(dir);
  save_trace_csv((base / "original.csv").string(), report.original);
  save_trace_csv((base / "modified.csv").string(), report.modified);
  const std::string summary = format_compare(report);
  write_text_file((base / "summary.txt").string(), summary);
  out << summary;
  return kOk;
}

int cmd_boundary(const std::string& config_path, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_and_echo(config_path, err);
  const auto runs = boundary_check(cfg.model, cfg.solver, cfg.w0);
  out << format_boundary(runs);
  bool failed_numerically = false;
  bool out_of_bounds = false;
  for (const auto& r : runs) {
    if (r.variant != Variant::Modified) continue;
    if (!r.within_bounds) out_of_bounds = true;
    if (r.failure) failed_numerically = true;
  }
  if (out_of_bounds) {
    err << "error: modified model left [w_min, w_max]\n";
    return kCheckFailed;
  }
  if (failed_numerically) {
    err << "error: a modified-model stress run did not complete\n";
    return kNumericalError;
  }
  return kOk;
}

int cmd_error(const std::string& model_path, const std::string& ref_path,
              const std::string& region, std::ostream& out) {
  const Region r = region_or_throw(region);
  const auto model = load_iv_csv(model_path);
  const ReferenceTrace ref = load_reference(ref_path);
  const PairedSamples paired = align_traces(model, ref);
  out << std::setprecision(kDigits) << rel_rms_error(paired, r) << '\n';
  return kOk;
}

int cmd_fit(const std::string& config_path, const std::string& ref_path,
            const std::string& free, const std::string& output,
            const std::string& region, int budget, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_and_echo(config_path, err);
  FitProblem problem;
  problem.free_parameters = parse_free(free, cfg.model);
  problem.objective_region = region_or_throw(region);
  problem.reference = load_reference(ref_path);
  problem.drive = cfg.drive;
  problem.w0 = cfg.w0;
  problem.budget = budget;
  const FitResult result = fit_parameters(problem, cfg.model, cfg.solver);

  std::ostringstream text;
  text << std::setprecision(kDigits);
  text << "# fitted against " << ref_path << ", region " << to_string(problem.objective_region)
       << ", error " << result.error << ", " << result.evaluations << " evaluations"
       << (result.budget_exhausted ? " (budget exhausted)" : "") << '\n';
  text << to_config_text(result.params);
  write_text_file(output, text.str());

  out << std::setprecision(kDigits);
  for (const auto& fp : problem.free_parameters) {
    out << fp.name << " = " << result.params.*find_param(fp.name)->member << '\n';
  }
  out << "error = " << result.error << '\n';
  out << "evaluations = " << result.evaluations << '\n';
  out << "status = " << (result.budget_exhausted ? "budget-exhausted" : "converged") << '\n';
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Tunnel-barrier memristor simulator"};
  app.require_subcommand(1);

  std::string config, output, model_csv, ref_csv, free, region = "full";
  int budget = 200;

  auto* sim = app.add_subcommand("simulate", "One transient run; trace CSV out");
  sim->add_option("config", config, "Config file")->required();
  sim->add_option("-o,--output", output, "Trace CSV (default: sim.output or stdout)");

  auto* cmp = app.add_subcommand("compare", "Original vs modified on the same drive");
  cmp->add_option("config", config, "Config file")->required();
  cmp->add_option("-o,--output", output, "Output directory")->required();

  auto* bnd = app.add_subcommand("boundary-check", "Width-bound stress ramps on both variants");
  bnd->add_option("config", config, "Config file")->required();

  auto* er = app.add_subcommand("error", "Relative RMS error between two I-V CSVs");
  er->add_option("model", model_csv, "Model CSV")->required();
  er->add_option("reference", ref_csv, "Reference CSV")->required();
  er->add_option("--region", region, "on, off or full");

  auto* fit = app.add_subcommand("fit", "Fit parameters to a reference CSV");
  fit->add_option("config", config, "Config file")->required();
  fit->add_option("reference", ref_csv, "Reference CSV")->required();
  fit->add_option("--free", free, "name[:lo:hi],...")->required();
  fit->add_option("-o,--output", output, "Fitted parameter file")->required();
  fit->add_option("--region", region, "on, off or full");
  fit->add_option("--budget", budget, "Max objective evaluations");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*sim) return cmd_simulate(config, output, out, err);
    if (*cmp) return cmd_compare(config, output, out, err);
    if (*bnd) return cmd_boundary(config, out, err);
    if (*er) return cmd_error(model_csv, ref_csv, region, out);
    if (*fit) return cmd_fit(config, ref_csv, free, output, region, budget, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace pickett::cli
