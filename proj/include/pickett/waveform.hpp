#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pickett {

enum class WaveKind { Triangular, Sine, RampHold, PiecewiseLinear };

std::string_view to_string(WaveKind k);
std::optional<WaveKind> parse_wave_kind(std::string_view text);

struct Breakpoint {
  double t = 0.0;  // s
  double v = 0.0;  // V

  bool operator==(const Breakpoint&) const = default;
};

/// Applied terminal voltage as a function of time.
///
/// Triangular: 0 -> +amplitude_pos -> 0 -> -amplitude_neg -> 0 per period,
///   four linear segments of equal length, repeated.
/// Sine: amplitude_pos * sin(2 pi t / period).
/// RampHold: linear from 0 to amplitude_pos (signed) over one period, then
///   held until t_end.
/// PiecewiseLinear: linear interpolation through `breakpoints`, holding the
///   end values outside them.
struct Waveform {
  WaveKind kind = WaveKind::Triangular;
  double amplitude_pos = 0.0;  // V
  double amplitude_neg = 0.0;  // V, magnitude of the negative excursion
  double period = 1.0;         // s
  double t_end = 1.0;          // s
  std::vector<Breakpoint> breakpoints;
  std::string label;           // preset name or free text, carried into traces

  void validate() const;

  bool operator==(const Waveform&) const = default;
};

/// Throws OutOfRange when t lies outside [0, t_end].
double sample_waveform(const Waveform& wf, double t);

/// Reconstructed drive for the fitted I-V loop: one 6 s triangular cycle,
/// +1.58 V then -0.92 V. The amplitudes are a calibration, not measured
/// values: with the default parameters the modified model switches OFF
/// from about (0.79 V, 0.61 mA), reaches w ~ 1.83 nm and stays above
/// 1.2 nm, while the original model runs 1.2 -> 1.72 -> 1.105 nm. The
/// usable window for the negative amplitude is narrow (about 0.914-0.926 V).
Waveform fig2_drive();

/// Upper boundary stress: 0 -> +9 V over 1 s, held to 2 s.
Waveform fig3_ramp();

/// Lower boundary stress: 0 -> -3 V over 1 s, held to 2 s.
Waveform fig4_ramp();

/// Named preset lookup: "fig2-drive", "fig3-ramp", "fig4-ramp".
std::optional<Waveform> drive_preset(std::string_view name);

}  // namespace pickett
