#include "pickett/params.hpp"

#include <array>
#include <cmath>
#include <string>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

constexpr std::array<ParamField, 20> kFields{{
    {"phi0", &ModelParams::phi0, "eV"},
    {"lm", &ModelParams::lm, "eV nm"},
    {"w1_const", &ModelParams::w1_const, "nm"},
    {"j_prefactor", &ModelParams::j_prefactor, "A nm^2"},
    {"b_coeff", &ModelParams::b_coeff, "nm^-1 eV^-1/2"},
    {"r_s", &ModelParams::r_s, "ohm"},
    {"f_off", &ModelParams::f_off, "nm/s"},
    {"f_on", &ModelParams::f_on, "nm/s"},
    {"i_off", &ModelParams::i_off, "A"},
    {"i_on", &ModelParams::i_on, "A"},
    {"a_off", &ModelParams::a_off, "nm"},
    {"a_on", &ModelParams::a_on, "nm"},
    {"w_c", &ModelParams::w_c, "nm"},
    {"b_cur", &ModelParams::b_cur, "A"},
    {"k_off1", &ModelParams::k_off1, ""},
    {"k_off2", &ModelParams::k_off2, ""},
    {"k_on1", &ModelParams::k_on1, ""},
    {"k_on2", &ModelParams::k_on2, ""},
    {"w_min", &ModelParams::w_min, "nm"},
    {"w_max", &ModelParams::w_max, "nm"},
}};

// Tolerance on w1_const against 1.2 * lm / phi0.
constexpr double kW1Tolerance = 1e-3;

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::Original ? "original" : "modified";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "original") return Variant::Original;
  if (text == "modified") return Variant::Modified;
  return std::nullopt;
}

std::span<const ParamField> param_fields() { return kFields; }

const ParamField* find_param(std::string_view name) {
  for (const auto& f : kFields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

void ModelParams::validate() const {
  for (const auto& f : kFields) {
    if (!std::isfinite(this->*f.member)) {
      throw InvariantViolation(std::string(f.name), "must be finite");
    }
  }
  auto positive = [](const char* name, double x) {
    if (!(x > 0.0)) throw InvariantViolation(name, "must be > 0");
  };
  positive("phi0", phi0);
  positive("lm", lm);
  positive("w1_const", w1_const);
  positive("j_prefactor", j_prefactor);
  positive("b_coeff", b_coeff);
  positive("w_c", w_c);
  positive("b_cur", b_cur);
  positive("i_off", i_off);
  positive("i_on", i_on);
  positive("f_off", f_off);
  positive("f_on", f_on);
  if (r_s < 0.0) throw InvariantViolation("r_s", "must be >= 0");
  positive("w_min", w_min);
  if (!(w_min < w_max)) throw InvariantViolation("w_min", "must be < w_max");
  if (std::abs(w1_const - 1.2 * lm / phi0) > kW1Tolerance) {
    throw InvariantViolation("w1_const",
                             "must equal 1.2*lm/phi0 within 1e-3 nm");
  }
}

}  // namespace pickett
