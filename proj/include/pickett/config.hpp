#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pickett/params.hpp"
#include "pickett/solver.hpp"
#include "pickett/waveform.hpp"

namespace pickett {

/// Where one setting came from: "default", "preset <name>" or "line <n>".
struct Provenance {
  std::string key;     // section.key
  std::string value;
  std::string source;
};

/// Fully defaulted run description assembled from a config file.
struct RunConfig {
  ModelParams model;
  Waveform drive = fig2_drive();
  SolverConfig solver;
  double w0 = 1.2;          // nm
  std::string output;       // empty: standard output
  std::vector<Provenance> provenance;
};

/// Parses the line-oriented config format:
///
///   # comment
///   [model]          any ModelParams field, plus variant = original|modified
///   k_off2 = 0.5
///   [drive]          preset, kind, amplitude_pos, amplitude_neg, period,
///                    t_end, breakpoints = "t:v, t:v, ..."
///   [sim]            newton_tol, newton_max_iter, bisect_span, ode_method,
///                    dt, substeps, w0, output
///
/// Every key is optional. Throws ParseError (with line number) for
/// malformed lines, UnknownKey for unrecognised sections or keys, and
/// InvariantViolation when the assembled configuration is invalid.
RunConfig parse_config(std::string_view text);

/// Reads and parses a config file; IoError if it cannot be read.
RunConfig load_config(const std::string& path);

/// One "key = value (source)" line per setting.
std::string format_provenance(const RunConfig& cfg);

/// ModelParams in config syntax (a complete [model] section).
std::string to_config_text(const ModelParams& params);

}  // namespace pickett
