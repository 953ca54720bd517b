#include "pickett/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

// Calibrated fig2-drive amplitudes (see fig2_drive()).
constexpr double kFig2AmplitudePos = 1.58;
constexpr double kFig2AmplitudeNeg = 0.92;

double triangular(const Waveform& wf, double t) {
  const double phase = std::fmod(t, wf.period) / wf.period * 4.0;
  if (phase < 1.0) return wf.amplitude_pos * phase;
  if (phase < 2.0) return wf.amplitude_pos * (2.0 - phase);
  if (phase < 3.0) return -wf.amplitude_neg * (phase - 2.0);
  return -wf.amplitude_neg * (4.0 - phase);
}

double piecewise(const Waveform& wf, double t) {
  const auto& bp = wf.breakpoints;
  if (t <= bp.front().t) return bp.front().v;
  if (t >= bp.back().t) return bp.back().v;
  auto upper = std::upper_bound(bp.begin(), bp.end(), t,
                                [](double x, const Breakpoint& b) { return x < b.t; });
  const Breakpoint& b = *upper;
  const Breakpoint& a = *(upper - 1);
  const double s = (t - a.t) / (b.t - a.t);
  return a.v + s * (b.v - a.v);
}

}  // namespace

std::string_view to_string(WaveKind k) {
  switch (k) {
    case WaveKind::Triangular: return "triangular";
    case WaveKind::Sine: return "sine";
    case WaveKind::RampHold: return "ramp-hold";
    case WaveKind::PiecewiseLinear: return "piecewise-linear";
  }
  return "?";
}

std::optional<WaveKind> parse_wave_kind(std::string_view text) {
  if (text == "triangular") return WaveKind::Triangular;
  if (text == "sine") return WaveKind::Sine;
  if (text == "ramp-hold") return WaveKind::RampHold;
  if (text == "piecewise-linear") return WaveKind::PiecewiseLinear;
  return std::nullopt;
}

void Waveform::validate() const {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw InvariantViolation("t_end", "must be > 0");
  }
  if (!std::isfinite(amplitude_pos)) throw InvariantViolation("amplitude_pos", "must be finite");
  if (!std::isfinite(amplitude_neg)) throw InvariantViolation("amplitude_neg", "must be finite");
  if (kind == WaveKind::PiecewiseLinear) {
    if (breakpoints.empty()) throw InvariantViolation("breakpoints", "must not be empty");
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
      if (!std::isfinite(breakpoints[k].t) || !std::isfinite(breakpoints[k].v)) {
        throw InvariantViolation("breakpoints", "must be finite");
      }
      if (k > 0 && !(breakpoints[k].t > breakpoints[k - 1].t)) {
        throw InvariantViolation("breakpoints", "times must be strictly increasing");
      }
    }
  } else if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvariantViolation("period", "must be > 0");
  }
}

double sample_waveform(const Waveform& wf, double t) {
  if (!(t >= 0.0 && t <= wf.t_end)) {
    std::ostringstream os;
    os << "t=" << t << " s outside [0, " << wf.t_end << "]";
    throw OutOfRange(os.str());
  }
  switch (wf.kind) {
    case WaveKind::Triangular:
      return triangular(wf, t);
    case WaveKind::Sine:
      return wf.amplitude_pos * std::sin(2.0 * std::numbers::pi * t / wf.period);
    case WaveKind::RampHold:
      return t >= wf.period ? wf.amplitude_pos : wf.amplitude_pos * (t / wf.period);
    case WaveKind::PiecewiseLinear:
      return piecewise(wf, t);
  }
  return 0.0;
}

Waveform fig2_drive() {
  Waveform wf;
  wf.kind = WaveKind::Triangular;
  wf.amplitude_pos = kFig2AmplitudePos;
  wf.amplitude_neg = kFig2AmplitudeNeg;
  wf.period = 6.0;
  wf.t_end = 6.0;
  wf.label = "fig2-drive";
  return wf;
}

Waveform fig3_ramp() {
  Waveform wf;
  wf.kind = WaveKind::RampHold;
  wf.amplitude_pos = 9.0;
  wf.period = 1.0;
  wf.t_end = 2.0;
  wf.label = "fig3-ramp";
  return wf;
}

Waveform fig4_ramp() {
  Waveform wf;
  wf.kind = WaveKind::RampHold;
  wf.amplitude_pos = -3.0;
  wf.period = 1.0;
  wf.t_end = 2.0;
  wf.label = "fig4-ramp";
  return wf;
}

std::optional<Waveform> drive_preset(std::string_view name) {
  if (name == "fig2-drive") return fig2_drive();
  if (name == "fig3-ramp") return fig3_ramp();
  if (name == "fig4-ramp") return fig4_ramp();
  return std::nullopt;
}

}  // namespace pickett
