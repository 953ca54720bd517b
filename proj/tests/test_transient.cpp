#include <doctest.h>

#include <cmath>

#include "pickett/errors.hpp"
#include "pickett/report.hpp"
#include "pickett/transient.hpp"
#include "pickett/waveform.hpp"

using namespace pickett;

namespace {

Waveform triangle(double amp, double period) {
  Waveform wf;
  wf.kind = WaveKind::Triangular;
  wf.amplitude_pos = amp;
  wf.amplitude_neg = amp;
  wf.period = period;
  wf.t_end = period;
  return wf;
}

SolverConfig coarse() {
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.substeps = 1;
  return cfg;
}

}  // namespace

TEST_CASE("triangular waveform") {
  const auto wf = triangle(1.0, 6.0);
  CHECK(sample_waveform(wf, 0.0) == 0.0);
  CHECK(sample_waveform(wf, 1.5) == doctest::Approx(1.0));
  CHECK(sample_waveform(wf, 3.0) == doctest::Approx(0.0));
  CHECK(sample_waveform(wf, 4.5) == doctest::Approx(-1.0));
  CHECK(sample_waveform(wf, 0.75) == doctest::Approx(0.5));
  CHECK(sample_waveform(wf, 6.0) == doctest::Approx(0.0));
}

TEST_CASE("asymmetric triangle uses amplitude_neg on the negative half") {
  auto wf = triangle(1.0, 4.0);
  wf.amplitude_neg = 0.25;
  CHECK(sample_waveform(wf, 1.0) == doctest::Approx(1.0));
  CHECK(sample_waveform(wf, 3.0) == doctest::Approx(-0.25));
}

TEST_CASE("ramp-hold presets") {
  const auto up = fig3_ramp();
  CHECK(sample_waveform(up, 0.5) == doctest::Approx(4.5));
  CHECK(sample_waveform(up, 1.5) == doctest::Approx(9.0));
  CHECK(sample_waveform(up, 2.0) == doctest::Approx(9.0));
  const auto down = fig4_ramp();
  CHECK(sample_waveform(down, 0.5) == doctest::Approx(-1.5));
  CHECK(sample_waveform(down, 1.7) == doctest::Approx(-3.0));
}

TEST_CASE("sine and piecewise-linear waveforms") {
  Waveform s;
  s.kind = WaveKind::Sine;
  s.amplitude_pos = 2.0;
  s.period = 4.0;
  s.t_end = 4.0;
  CHECK(sample_waveform(s, 1.0) == doctest::Approx(2.0));
  CHECK(sample_waveform(s, 3.0) == doctest::Approx(-2.0));

  Waveform pwl;
  pwl.kind = WaveKind::PiecewiseLinear;
  pwl.t_end = 3.0;
  pwl.breakpoints = {{0.5, 0.0}, {1.0, 1.0}, {2.0, -1.0}};
  CHECK(sample_waveform(pwl, 0.0) == 0.0);
  CHECK(sample_waveform(pwl, 0.75) == doctest::Approx(0.5));
  CHECK(sample_waveform(pwl, 1.5) == doctest::Approx(0.0));
  CHECK(sample_waveform(pwl, 3.0) == doctest::Approx(-1.0));
}

TEST_CASE("waveform validation and range") {
  const auto wf = triangle(1.0, 6.0);
  CHECK_THROWS_AS(sample_waveform(wf, -0.1), OutOfRange);
  CHECK_THROWS_AS(sample_waveform(wf, 6.5), OutOfRange);

  Waveform bad = wf;
  bad.t_end = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvariantViolation);
  Waveform pwl;
  pwl.kind = WaveKind::PiecewiseLinear;
  pwl.t_end = 1.0;
  pwl.breakpoints = {{0.5, 0.0}, {0.5, 1.0}};
  CHECK_THROWS_AS(pwl.validate(), InvariantViolation);
}

TEST_CASE("preset lookup") {
  CHECK(drive_preset("fig2-drive") == fig2_drive());
  CHECK(drive_preset("fig3-ramp") == fig3_ramp());
  CHECK(drive_preset("fig4-ramp") == fig4_ramp());
  CHECK_FALSE(drive_preset("fig5").has_value());
  CHECK(parse_wave_kind("ramp-hold") == WaveKind::RampHold);
  CHECK(to_string(WaveKind::PiecewiseLinear) == "piecewise-linear");
}

TEST_CASE("zero drive keeps the device at rest") {
  const auto wf = triangle(0.0, 0.5);
  const auto trace = simulate(wf, ModelParams{}, coarse(), 1.37);
  CHECK(trace.size() == 501);
  for (const auto& s : trace.samples) {
    CHECK(s.i == 0.0);
    CHECK(s.w_eff == 1.37);
  }
  const auto curve = hysteresis_curve(trace);
  CHECK(curve.size() == trace.size());
  for (const auto& pt : curve) {
    CHECK(pt.v == 0.0);
    CHECK(pt.i == 0.0);
  }
}

TEST_CASE("output grid spacing is dt * substeps") {
  SolverConfig cfg;
  cfg.dt = 1e-4;
  cfg.substeps = 10;
  auto wf = triangle(0.5, 0.1);
  const auto trace = simulate(wf, ModelParams{}, cfg);
  REQUIRE(trace.size() == 101);
  for (std::size_t k = 1; k < trace.size(); ++k) {
    CHECK(trace.samples[k].t > trace.samples[k - 1].t);
    CHECK(trace.samples[k].t == doctest::Approx(k * 1e-3).epsilon(1e-12));
  }
  CHECK(trace.w0 == 1.2);
  CHECK(trace.drive == wf);
}

TEST_CASE("pinched loop on the calibrated drive") {
  const auto trace = simulate(fig2_drive(), ModelParams{}, coarse());
  int zero_crossings = 0;
  for (const auto& s : trace.samples) {
    if (std::fabs(s.v) < 1e-9) {
      ++zero_crossings;
      CHECK(std::fabs(s.i) < 1e-12);
    }
  }
  CHECK(zero_crossings >= 2);
}

TEST_CASE("calibrated drive: width ranges of both variants") {
  const auto mod = simulate(fig2_drive(), ModelParams{}, coarse());
  ModelParams orig;
  orig.variant = Variant::Original;
  const auto org = simulate(fig2_drive(), orig, coarse());
  const auto rm = w_eff_range(mod);
  const auto ro = w_eff_range(org);
  CHECK(rm.min >= 1.15);
  CHECK(rm.max <= 1.85);
  CHECK(ro.min < 1.15);
  CHECK(ro.min < rm.min - 0.05);
}

TEST_CASE("simulation is reproducible") {
  const auto a = simulate(fig2_drive(), ModelParams{}, coarse());
  const auto b = simulate(fig2_drive(), ModelParams{}, coarse());
  REQUIRE(a.size() == b.size());
  bool identical = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a.samples[k];
    const auto& y = b.samples[k];
    identical = identical && x.t == y.t && x.v == y.v && x.v_g == y.v_g && x.i == y.i &&
                x.w_eff == y.w_eff && x.w_raw == y.w_raw;
  }
  CHECK(identical);
}

TEST_CASE("modified variant needs w0 inside the bounds") {
  CHECK_THROWS_AS(simulate(fig2_drive(), ModelParams{}, coarse(), 2.5), InvariantViolation);
  ModelParams orig;
  orig.variant = Variant::Original;
  const auto wf = triangle(0.0, 0.01);
  CHECK_NOTHROW(simulate(wf, orig, coarse(), 2.5));
}

TEST_CASE("a failing run reports its time and the partial trace") {
  Waveform wf = fig4_ramp();
  try {
    simulate(wf, ModelParams{}, coarse());
    FAIL("expected SimulationError");
  } catch (const SimulationError& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() <= wf.t_end);
    CHECK(e.partial().size() > 0);
    CHECK(e.partial().samples.back().t <= e.time());
    CHECK(std::string(e.what()).find("t=") != std::string::npos);
    for (const auto& s : e.partial().samples) {
      CHECK(s.w_eff >= 1.0);
      CHECK(s.w_eff <= 2.0);
    }
  }
}

TEST_CASE("hysteresis_curve of an empty trace") {
  CHECK_THROWS_AS(hysteresis_curve(Trace{}), EmptyTrace);
}
