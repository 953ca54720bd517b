#include "pickett/csv.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

constexpr int kDigits = std::numeric_limits<double>::max_digits10;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    cells.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cells;
}

[[noreturn]] void malformed(const std::string& source, int line, const std::string& what) {
  throw IoError(source + ":" + std::to_string(line) + ": " + what);
}

double parse_cell(std::string_view cell, const std::string& source, int line) {
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    malformed(source, line, "not a number: '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << kTraceHeader << '\n' << std::setprecision(kDigits);
  for (const auto& s : trace.samples) {
    out << s.t << ',' << s.v << ',' << s.v_g << ',' << s.i << ',' << s.w_eff << ','
        << s.w_raw << '\n';
  }
}

void write_reference_csv(std::ostream& out, std::span<const IvSample> samples) {
  out << kReferenceHeader << '\n' << std::setprecision(kDigits);
  for (const auto& s : samples) out << s.t << ',' << s.v << ',' << s.i << '\n';
}

std::vector<IvSample> read_iv_csv(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  int col_t = -1, col_v = -1, col_i = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto header = split(line);
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] == "t") col_t = static_cast<int>(k);
      if (header[k] == "v") col_v = static_cast<int>(k);
      if (header[k] == "i") col_i = static_cast<int>(k);
    }
    break;
  }
  if (col_t < 0 || col_v < 0 || col_i < 0) {
    malformed(source, line_no, "header must name columns t, v and i");
  }

  std::vector<IvSample> samples;
  const auto needed = static_cast<std::size_t>(std::max({col_t, col_v, col_i})) + 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() < needed) malformed(source, line_no, "too few columns");
    samples.push_back({parse_cell(cells[col_t], source, line_no),
                       parse_cell(cells[col_v], source, line_no),
                       parse_cell(cells[col_i], source, line_no)});
  }
  return samples;
}

void save_trace_csv(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_trace_csv(out, trace);
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<IvSample> load_iv_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_iv_csv(in, path);
}

ReferenceTrace load_reference(const std::string& path) {
  auto samples = load_iv_csv(path);
  if (samples.empty()) throw IoError(path + ": no data rows");
  return ReferenceTrace::from_samples(std::move(samples));
}

}  // namespace pickett
