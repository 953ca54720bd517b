#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "pickett/csv.hpp"
#include "pickett/errors.hpp"
#include "pickett/metrics.hpp"

using namespace pickett;

namespace {

Trace short_trace() {
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.substeps = 5;
  return simulate(fig2_drive(), ModelParams{}, cfg);
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("csv headers") {
  CHECK(std::string(kTraceHeader) == "t,v,v_g,i,w_eff,w_raw");
  CHECK(std::string(kReferenceHeader) == "t,v,i");
  std::ostringstream trace_out;
  write_trace_csv(trace_out, short_trace());
  CHECK(first_line(trace_out.str()) == "t,v,v_g,i,w_eff,w_raw");
  std::ostringstream ref_out;
  const std::vector<IvSample> s{{0, 1, 2}};
  write_reference_csv(ref_out, s);
  CHECK(first_line(ref_out.str()) == "t,v,i");
}

TEST_CASE("trace round trip through a reference read") {
  const auto trace = short_trace();
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream in(out.str());
  const auto ref = ReferenceTrace::from_samples(read_iv_csv(in));
  REQUIRE(ref.size() == trace.size());
  for (auto r : {Region::On, Region::Off, Region::Full}) {
    CHECK(rel_rms_error(trace, ref, r) < 1e-9);
  }
  for (std::size_t k = 0; k < trace.size(); ++k) {
    CHECK(ref.samples[k].i == trace.samples[k].i);
  }
}

TEST_CASE("columns are found by header name") {
  std::istringstream in("i,extra,t,v\n1e-3,9,0.5,0.25\n2e-3,9,1.0,0.5\n");
  const auto s = read_iv_csv(in);
  REQUIRE(s.size() == 2);
  CHECK(s[1] == IvSample{1.0, 0.5, 2e-3});
}

TEST_CASE("malformed input is an I/O error") {
  std::istringstream missing("t,v\n0,1\n");
  CHECK_THROWS_AS(read_iv_csv(missing), IoError);
  std::istringstream bad_number("t,v,i\n0,1,2\n1,x,3\n");
  try {
    read_iv_csv(bad_number, "ref.csv");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("ref.csv:3") != std::string::npos);
  }
  std::istringstream short_row("t,v,i\n0,1\n");
  CHECK_THROWS_AS(read_iv_csv(short_row), IoError);
  CHECK_THROWS_AS(load_iv_csv("/nonexistent/trace.csv"), IoError);
}
