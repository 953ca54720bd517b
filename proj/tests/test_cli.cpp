#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pickett/cli.hpp"
#include "pickett/csv.hpp"

namespace fs = std::filesystem;
using pickett::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pickett-sim");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
  const fs::path dir = PICKETT_TEST_TMP;
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path path = tmp_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kCoarse = "[sim]\ndt = 1e-3\nsubsteps = 1\n";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == pickett::cli::kConfigError);
  CHECK(run({"frobnicate"}).code == pickett::cli::kConfigError);
  CHECK(run({"simulate"}).code == pickett::cli::kConfigError);
  CHECK(run({"--help"}).code == pickett::cli::kOk);
}

TEST_CASE("config problems exit with 2, missing files with 4") {
  const auto bad = write_file("bad.ini", "[model]\nw_min = 3\n");
  const auto r = run({"simulate", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("w_min") != std::string::npos);
  CHECK(run({"simulate", write_file("typo.ini", "[model]\nphi = 1\n")}).code == 2);
  CHECK(run({"simulate", (tmp_dir() / "absent.ini").string()}).code == 4);
  CHECK(run({"error", "/nonexistent/a.csv", "/nonexistent/b.csv"}).code == 4);
}

TEST_CASE("simulate writes a trace and echoes provenance") {
  const auto cfg = write_file("coarse.ini", kCoarse);
  const auto csv = (tmp_dir() / "trace.csv").string();
  const auto r = run({"simulate", cfg, "-o", csv});
  CHECK(r.code == 0);
  CHECK(r.err.find("model.r_s = 215 (default)") != std::string::npos);
  CHECK(r.err.find("sim.dt = 0.001 (line 2)") != std::string::npos);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,v,v_g,i,w_eff,w_raw");
  CHECK(pickett::load_iv_csv(csv).size() == 6001);
}

TEST_CASE("simulate to standard output") {
  const auto cfg = write_file("short.ini", std::string(kCoarse) +
                                               "[drive]\nkind = sine\namplitude_pos = 0.5\n"
                                               "period = 0.01\nt_end = 0.01\n");
  const auto r = run({"simulate", cfg});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,v,v_g,i,w_eff,w_raw\n", 0) == 0);
}

TEST_CASE("zero-amplitude drive gives an all-zero current column") {
  const auto cfg = write_file("zero.ini", std::string(kCoarse) +
                                              "[drive]\nkind = triangular\namplitude_pos = 0\n"
                                              "amplitude_neg = 0\nperiod = 1\nt_end = 1\n");
  const auto csv = (tmp_dir() / "zero.csv").string();
  REQUIRE(run({"simulate", cfg, "-o", csv}).code == 0);
  const auto samples = pickett::load_iv_csv(csv);
  CHECK(samples.size() == 1001);
  for (const auto& s : samples) CHECK(s.i == 0.0);
}

TEST_CASE("error of a file against itself is zero") {
  const auto cfg = write_file("coarse.ini", kCoarse);
  const auto csv = (tmp_dir() / "self.csv").string();
  REQUIRE(run({"simulate", cfg, "-o", csv}).code == 0);
  for (const char* region : {"full", "on", "off"}) {
    const auto r = run({"error", csv, csv, "--region", region});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
  }
  CHECK(run({"error", csv, csv, "--region", "middle"}).code == 2);
}

TEST_CASE("simulation failure exits with 3 and names the time") {
  const auto cfg = write_file("fail.ini", std::string(kCoarse) + "[drive]\npreset = fig4-ramp\n");
  const auto r = run({"simulate", cfg, "-o", (tmp_dir() / "fail.csv").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("t=") != std::string::npos);
}

TEST_CASE("compare writes both traces and a summary") {
  const auto cfg = write_file("coarse.ini", kCoarse);
  const auto dir = tmp_dir() / "compare";
  const auto r = run({"compare", cfg, "-o", dir.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "original.csv"));
  CHECK(fs::exists(dir / "modified.csv"));
  CHECK(fs::exists(dir / "summary.txt"));
  CHECK(r.out.find("modified.w_eff_min") != std::string::npos);
  CHECK(r.out.find("discrepancy.on") != std::string::npos);
  CHECK(r.out.find("discrepancy.off") != std::string::npos);
}

TEST_CASE("boundary-check exit status") {
  // With the default 215 ohm electrode resistance the stress ramps outrun
  // the barrier before the hold phase.
  const auto defaults = run({"boundary-check", write_file("coarse.ini", kCoarse)});
  CHECK(defaults.code == 3);
  CHECK(defaults.out.find("fig3-ramp modified") != std::string::npos);
  CHECK(defaults.out.find("fig4-ramp original") != std::string::npos);

  const auto cfg = write_file("rs2400.ini", std::string(kCoarse) + "[model]\nr_s = 2400\n");
  const auto r = run({"boundary-check", cfg});
  CHECK(r.code == 0);
}

TEST_CASE("fit writes a parameter file that loads as a config") {
  const auto cfg = write_file("coarse.ini", kCoarse);
  const auto ref = (tmp_dir() / "fit_ref.csv").string();
  REQUIRE(run({"simulate", cfg, "-o", ref}).code == 0);
  const auto start = write_file("fit_start.ini", std::string(kCoarse) + "[model]\ni_off = 130e-6\n");
  const auto params = (tmp_dir() / "fitted.ini").string();
  const auto r = run({"fit", start, ref, "--free", "i_off:50e-6:300e-6", "-o", params,
                      "--region", "off", "--budget", "40"});
  CHECK(r.code == 0);
  CHECK(r.out.find("i_off = ") != std::string::npos);
  const auto fitted = run({"simulate", params, "-o", (tmp_dir() / "fitted.csv").string()});
  CHECK(fitted.code == 0);

  CHECK(run({"fit", start, ref, "--free", "bogus", "-o", params}).code == 2);
  CHECK(run({"fit", start, ref, "--free", "i_off:1", "-o", params}).code == 2);
}
