#include "pickett/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

bool in_region(double v, Region region) {
  switch (region) {
    case Region::On: return v < 0.0;
    case Region::Off: return v > 0.0;
    case Region::Full: return true;
  }
  return false;
}

}  // namespace

ReferenceTrace ReferenceTrace::from_samples(std::vector<IvSample> samples) {
  if (samples.empty()) throw EmptyTrace("reference trace has no samples");
  ReferenceTrace ref;
  double sum_v = 0.0;
  double sum_i = 0.0;
  for (const auto& s : samples) {
    sum_v += s.v;
    sum_i += s.i;
  }
  const auto n = static_cast<double>(samples.size());
  ref.mean_v = sum_v / n;
  ref.mean_i = sum_i / n;
  ref.samples = std::move(samples);
  return ref;
}

ReferenceTrace ReferenceTrace::from_trace(const Trace& trace) {
  return from_samples(iv_series(trace));
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::On: return "on";
    case Region::Off: return "off";
    case Region::Full: return "full";
  }
  return "?";
}

std::optional<Region> parse_region(std::string_view text) {
  if (text == "on") return Region::On;
  if (text == "off") return Region::Off;
  if (text == "full") return Region::Full;
  return std::nullopt;
}

std::vector<IvSample> iv_series(const Trace& trace) {
  std::vector<IvSample> out;
  out.reserve(trace.size());
  for (const auto& s : trace.samples) out.push_back({s.t, s.v, s.i});
  return out;
}

PairedSamples align_traces(std::span<const IvSample> model,
                           const ReferenceTrace& reference) {
  PairedSamples paired;
  if (model.empty()) throw NoOverlap("model trace is empty");
  const double t_first = model.front().t;
  const double t_last = model.back().t;

  for (const auto& r : reference.samples) {
    if (r.t < t_first || r.t > t_last) continue;
    // First model sample at or after r.t.
    auto it = std::lower_bound(model.begin(), model.end(), r.t,
                               [](const IvSample& s, double t) { return s.t < t; });
    IvSample m;
    if (it->t == r.t || it == model.begin()) {
      m = *it;
    } else {
      const IvSample& a = *(it - 1);
      const IvSample& b = *it;
      const double s = (r.t - a.t) / (b.t - a.t);
      m = {r.t, a.v + s * (b.v - a.v), a.i + s * (b.i - a.i)};
    }
    m.t = r.t;
    paired.model.push_back(m);
    paired.reference.push_back(r);
  }
  if (paired.reference.empty()) {
    throw NoOverlap("model and reference time ranges do not overlap");
  }
  return paired;
}

PairedSamples align_traces(const Trace& model, const ReferenceTrace& reference) {
  const auto series = iv_series(model);
  return align_traces(series, reference);
}

double rel_rms_error(const PairedSamples& paired, Region region) {
  if (paired.model.size() != paired.reference.size()) {
    throw LengthMismatch("model has " + std::to_string(paired.model.size()) +
                         " samples, reference has " +
                         std::to_string(paired.reference.size()));
  }
  double sum_v = 0.0;
  double sum_i = 0.0;
  std::size_t n = 0;
  for (const auto& r : paired.reference) {
    if (!in_region(r.v, region)) continue;
    sum_v += r.v;
    sum_i += r.i;
    ++n;
  }
  if (n == 0) {
    throw EmptyTrace("no reference samples in region '" +
                     std::string(to_string(region)) + "'");
  }
  const double mean_v = sum_v / static_cast<double>(n);
  const double mean_i = sum_i / static_cast<double>(n);
  if (mean_v == 0.0 || mean_i == 0.0) {
    throw DegenerateReference("reference mean voltage or current is zero in region '" +
                              std::string(to_string(region)) + "'");
  }

  double dv2 = 0.0;
  double di2 = 0.0;
  for (std::size_t k = 0; k < paired.reference.size(); ++k) {
    const auto& r = paired.reference[k];
    if (!in_region(r.v, region)) continue;
    const auto& m = paired.model[k];
    dv2 += (m.v - r.v) * (m.v - r.v);
    di2 += (m.i - r.i) * (m.i - r.i);
  }
  const double e2 = (dv2 / (mean_v * mean_v) + di2 / (mean_i * mean_i)) /
                    static_cast<double>(n);
  return std::sqrt(e2);
}

double rel_rms_error(const Trace& model, const ReferenceTrace& reference,
                     Region region) {
  if (model.size() != reference.size()) {
    throw LengthMismatch("model has " + std::to_string(model.size()) +
                         " samples, reference has " +
                         std::to_string(reference.size()));
  }
  PairedSamples paired;
  paired.model = iv_series(model);
  paired.reference = reference.samples;
  return rel_rms_error(paired, region);
}

}  // namespace pickett
