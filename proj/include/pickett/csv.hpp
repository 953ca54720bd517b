#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pickett/metrics.hpp"
#include "pickett/transient.hpp"

namespace pickett {

inline constexpr const char* kTraceHeader = "t,v,v_g,i,w_eff,w_raw";
inline constexpr const char* kReferenceHeader = "t,v,i";

/// Trace rows with 17 significant digits so values survive a round trip.
void write_trace_csv(std::ostream& out, const Trace& trace);
void write_reference_csv(std::ostream& out, std::span<const IvSample> samples);

/// Reads the t, v and i columns of a CSV with a header line; other columns
/// are ignored, so both trace and reference files are accepted. Throws
/// IoError naming the line on malformed input.
std::vector<IvSample> read_iv_csv(std::istream& in, const std::string& source = "<stream>");

void save_trace_csv(const std::string& path, const Trace& trace);
std::vector<IvSample> load_iv_csv(const std::string& path);
ReferenceTrace load_reference(const std::string& path);

}  // namespace pickett
