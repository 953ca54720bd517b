#include "pickett/config.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

double to_double(std::string_view text, int line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

int to_int(std::string_view text, int line) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Breakpoint> to_breakpoints(std::string_view text, int line) {
  std::vector<Breakpoint> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma - pos));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line, "breakpoint '" + std::string(item) + "' is not t:v");
    }
    out.push_back({to_double(trim(item.substr(0, colon)), line),
                   to_double(trim(item.substr(colon + 1)), line)});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;

std::map<std::string, Section> tokenize(std::string_view text) {
  static const std::set<std::string> kSections{"model", "drive", "sim"};
  std::map<std::string, Section> sections;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kSections.count(current)) {
        throw UnknownKey("line " + std::to_string(line_no) + ": unknown section [" +
                         current + "]");
      }
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    if (current.empty()) throw ParseError(line_no, "key outside of any [section]");
    const std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw ParseError(line_no, "empty key");
    auto [it, inserted] = sections[current].emplace(key, Entry{value, line_no});
    if (!inserted) throw ParseError(line_no, "duplicate key '" + key + "'");
  }
  return sections;
}

[[noreturn]] void unknown_key(const std::string& section, const std::string& key, int line) {
  throw UnknownKey("line " + std::to_string(line) + ": unknown key '" + key +
                   "' in [" + section + "]");
}

std::string line_source(int line) { return "line " + std::to_string(line); }

}  // namespace

RunConfig parse_config(std::string_view text) {
  auto sections = tokenize(text);
  RunConfig cfg;
  auto note = [&](std::string key, std::string value, std::string source) {
    cfg.provenance.push_back({std::move(key), std::move(value), std::move(source)});
  };

  // [model]
  Section& model = sections["model"];
  for (const auto& [key, entry] : model) {
    if (key == "variant") continue;
    const ParamField* field = find_param(key);
    if (field == nullptr) unknown_key("model", key, entry.line);
    cfg.model.*field->member = to_double(entry.value, entry.line);
  }
  if (auto it = model.find("variant"); it != model.end()) {
    auto v = parse_variant(it->second.value);
    if (!v) throw ParseError(it->second.line, "variant must be 'original' or 'modified'");
    cfg.model.variant = *v;
  }
  for (const auto& f : param_fields()) {
    auto it = model.find(std::string(f.name));
    note("model." + std::string(f.name), format_double(cfg.model.*f.member),
         it == model.end() ? "default" : line_source(it->second.line));
  }
  {
    auto it = model.find("variant");
    note("model.variant", std::string(to_string(cfg.model.variant)),
         it == model.end() ? "default" : line_source(it->second.line));
  }

  // [drive]
  static const std::set<std::string> kDriveKeys{
      "preset", "kind", "amplitude_pos", "amplitude_neg", "period", "t_end", "breakpoints"};
  Section& drive = sections["drive"];
  for (const auto& [key, entry] : drive) {
    if (!kDriveKeys.count(key)) unknown_key("drive", key, entry.line);
  }
  std::string preset_source = "default";
  std::string preset_name = "fig2-drive";
  if (auto it = drive.find("preset"); it != drive.end()) {
    preset_name = it->second.value;
    preset_source = line_source(it->second.line);
  }
  auto preset = drive_preset(preset_name);
  if (!preset) {
    throw ParseError(drive.at("preset").line, "unknown drive preset '" + preset_name + "'");
  }
  cfg.drive = *preset;
  note("drive.preset", preset_name, preset_source);
  const std::string from_preset = "preset " + preset_name;
  auto drive_number = [&](const char* key, double& slot) {
    auto it = drive.find(key);
    if (it != drive.end()) {
      slot = to_double(it->second.value, it->second.line);
      cfg.drive.label = "custom";
    }
    note(std::string("drive.") + key, format_double(slot),
         it == drive.end() ? from_preset : line_source(it->second.line));
  };
  if (auto it = drive.find("kind"); it != drive.end()) {
    auto kind = parse_wave_kind(it->second.value);
    if (!kind) throw ParseError(it->second.line, "unknown waveform kind '" + it->second.value + "'");
    cfg.drive.kind = *kind;
    cfg.drive.label = "custom";
  }
  note("drive.kind", std::string(to_string(cfg.drive.kind)),
       drive.count("kind") ? line_source(drive.at("kind").line) : from_preset);
  drive_number("amplitude_pos", cfg.drive.amplitude_pos);
  drive_number("amplitude_neg", cfg.drive.amplitude_neg);
  drive_number("period", cfg.drive.period);
  drive_number("t_end", cfg.drive.t_end);
  if (auto it = drive.find("breakpoints"); it != drive.end()) {
    cfg.drive.breakpoints = to_breakpoints(it->second.value, it->second.line);
    cfg.drive.label = "custom";
    note("drive.breakpoints", it->second.value, line_source(it->second.line));
  }

  // [sim]
  static const std::set<std::string> kSimKeys{"newton_tol", "newton_max_iter", "bisect_span",
                                              "ode_method", "dt", "substeps", "w0", "output"};
  Section& sim = sections["sim"];
  for (const auto& [key, entry] : sim) {
    if (!kSimKeys.count(key)) unknown_key("sim", key, entry.line);
  }
  auto source_of = [&](const char* key) {
    auto it = sim.find(key);
    return it == sim.end() ? std::string("default") : line_source(it->second.line);
  };
  auto sim_number = [&](const char* key, double& slot) {
    if (auto it = sim.find(key); it != sim.end()) slot = to_double(it->second.value, it->second.line);
    note(std::string("sim.") + key, format_double(slot), source_of(key));
  };
  auto sim_int = [&](const char* key, int& slot) {
    if (auto it = sim.find(key); it != sim.end()) slot = to_int(it->second.value, it->second.line);
    note(std::string("sim.") + key, std::to_string(slot), source_of(key));
  };
  sim_number("newton_tol", cfg.solver.newton_tol);
  sim_int("newton_max_iter", cfg.solver.newton_max_iter);
  sim_number("bisect_span", cfg.solver.bisect_span);
  if (auto it = sim.find("ode_method"); it != sim.end()) {
    auto m = parse_ode_method(it->second.value);
    if (!m) throw ParseError(it->second.line, "ode_method must be 'rk4' or 'euler'");
    cfg.solver.ode_method = *m;
  }
  note("sim.ode_method", std::string(to_string(cfg.solver.ode_method)), source_of("ode_method"));
  sim_number("dt", cfg.solver.dt);
  sim_int("substeps", cfg.solver.substeps);
  sim_number("w0", cfg.w0);
  if (auto it = sim.find("output"); it != sim.end()) cfg.output = it->second.value;
  note("sim.output", cfg.output.empty() ? "-" : cfg.output, source_of("output"));

  cfg.model.validate();
  cfg.solver.validate();
  cfg.drive.validate();
  if (!(cfg.w0 > cfg.model.w1_const)) throw InvariantViolation("w0", "must exceed w1_const");
  if (cfg.model.clamped() && (cfg.w0 < cfg.model.w_min || cfg.w0 > cfg.model.w_max)) {
    throw InvariantViolation("w0", "must lie in [w_min, w_max] for the modified model");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string format_provenance(const RunConfig& cfg) {
  std::ostringstream os;
  for (const auto& p : cfg.provenance) {
    os << p.key << " = " << p.value << " (" << p.source << ")\n";
  }
  return os.str();
}

std::string to_config_text(const ModelParams& params) {
  std::ostringstream os;
  os << "[model]\n";
  for (const auto& f : param_fields()) {
    os << f.name << " = " << format_double(params.*f.member) << '\n';
  }
  os << "variant = " << to_string(params.variant) << '\n';
  return os.str();
}

}  // namespace pickett
