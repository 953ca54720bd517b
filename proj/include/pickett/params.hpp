#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pickett {

/// Which form of the state equation is evaluated.
///
/// Original: all damping factors forced to 1 and no width clamp.
/// Modified: configured damping factors and the [w_min, w_max] hard limiter.
enum class Variant { Original, Modified };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// Model constants. Units are fixed project-wide: eV, nm, V, A, s, nm/s.
///
/// The defaults are the fitted set of the damped model (subcircuit constants
/// with the physical constants already folded into j_prefactor, b_coeff and
/// lm). f_off / f_on already include the division by the 1 nF state
/// capacitor used by the SPICE formulation.
struct ModelParams {
  double phi0 = 0.95;          // barrier height, eV
  double lm = 0.0998;          // lambda * w, eV nm
  double w1_const = 0.1261;    // inner image-plane distance, nm
  double j_prefactor = 0.0617; // folded j0 * A, A nm^2
  double b_coeff = 10.246;     // folded 4 pi sqrt(2m) / h, nm^-1 eV^-1/2
  double r_s = 215.0;          // series electrode resistance, ohm

  double f_off = 3.5e3;        // nm/s
  double f_on = 2.0e6;         // nm/s
  double i_off = 115e-6;       // A
  double i_on = 8.9e-6;        // A
  double a_off = 1.2;          // nm
  double a_on = 1.8;           // nm
  double w_c = 0.095;          // nm
  double b_cur = 600e-6;       // A

  double k_off1 = 1.0;
  double k_off2 = 0.5;
  double k_on1 = 1.0;
  double k_on2 = 1.0;

  double w_min = 1.0;          // nm
  double w_max = 2.0;          // nm

  Variant variant = Variant::Modified;

  /// Throws InvariantViolation naming the first offending field.
  void validate() const;

  bool clamped() const noexcept { return variant == Variant::Modified; }

  // Damping factors actually used by the state equation. The original
  // model is the k = 1 special case.
  double eff_k_off1() const noexcept { return clamped() ? k_off1 : 1.0; }
  double eff_k_off2() const noexcept { return clamped() ? k_off2 : 1.0; }
  double eff_k_on1() const noexcept { return clamped() ? k_on1 : 1.0; }
  double eff_k_on2() const noexcept { return clamped() ? k_on2 : 1.0; }

  bool operator==(const ModelParams&) const = default;
};

/// Named access to the numeric fields of ModelParams, used by the config
/// reader and the fitter.
struct ParamField {
  std::string_view name;
  double ModelParams::*member;
  std::string_view unit;
};

std::span<const ParamField> param_fields();

/// nullptr if `name` is not a numeric ModelParams field.
const ParamField* find_param(std::string_view name);

}  // namespace pickett
