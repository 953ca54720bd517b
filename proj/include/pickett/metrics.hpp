#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pickett/transient.hpp"

namespace pickett {

/// One (t, v, i) sample of an I-V time series.
struct IvSample {
  double t = 0.0;  // s
  double v = 0.0;  // V
  double i = 0.0;  // A

  bool operator==(const IvSample&) const = default;
};

/// Reference I-V series (measured or synthetic) that model traces are
/// scored against. mean_v / mean_i are the means over all samples.
struct ReferenceTrace {
  std::vector<IvSample> samples;
  double mean_v = 0.0;
  double mean_i = 0.0;

  /// Throws EmptyTrace for an empty series.
  static ReferenceTrace from_samples(std::vector<IvSample> samples);
  static ReferenceTrace from_trace(const Trace& trace);

  std::size_t size() const noexcept { return samples.size(); }
};

/// Selects which samples enter the error: On = reference v < 0,
/// Off = reference v > 0, Full = all. Samples at v = 0 belong to neither
/// switching region.
enum class Region { On, Off, Full };

std::string_view to_string(Region r);
std::optional<Region> parse_region(std::string_view text);

/// Model and reference samples paired one-to-one on the reference time grid.
struct PairedSamples {
  std::vector<IvSample> model;
  std::vector<IvSample> reference;

  std::size_t size() const noexcept { return reference.size(); }
};

std::vector<IvSample> iv_series(const Trace& trace);

/// Linear interpolation of the model onto the reference timestamps.
/// Reference samples outside the model's time span are dropped; throws
/// NoOverlap when nothing is left. Model times must be non-decreasing.
PairedSamples align_traces(std::span<const IvSample> model,
                           const ReferenceTrace& reference);
PairedSamples align_traces(const Trace& model, const ReferenceTrace& reference);

/// Relative RMS error
///   e = sqrt( (1/N) * ( sum (v_m - v_r)^2 / vbar_r^2 + sum (i_m - i_r)^2 / ibar_r^2 ) )
/// over the samples of `region`, where vbar_r and ibar_r are the reference
/// means over that region.
///
/// Throws LengthMismatch for differently sized inputs, EmptyTrace if the
/// region holds no samples and DegenerateReference when a reference mean
/// is zero.
double rel_rms_error(const PairedSamples& paired, Region region);

/// Sample-by-sample pairing of a trace with a reference of the same length.
double rel_rms_error(const Trace& model, const ReferenceTrace& reference,
                     Region region);

}  // namespace pickett
