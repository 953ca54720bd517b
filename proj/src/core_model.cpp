#include "pickett/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pickett/errors.hpp"

namespace pickett {

namespace {

struct GeometryResult {
  BarrierGeometry geom;
  enum class Status { Ok, Degenerate, Negative, BadWidth } status;
};

GeometryResult compute_geometry(double w, double v_g, const ModelParams& p) {
  GeometryResult r{};
  if (!(w > p.w1_const) || !std::isfinite(w) || !std::isfinite(v_g)) {
    r.status = GeometryResult::Status::BadWidth;
    return r;
  }
  const double av = std::abs(v_g);
  BarrierGeometry& g = r.geom;
  g.lambda_ = p.lm / w;
  g.w1 = p.w1_const;
  g.w2 = g.w1 + w * (1.0 - 9.2 * g.lambda_ / (3.0 * p.phi0 + 4.0 * g.lambda_ - 2.0 * av));
  g.dw = g.w2 - g.w1;
  if (!(g.w2 > g.w1) || !(g.w2 < w)) {
    r.status = GeometryResult::Status::Degenerate;
    return r;
  }
  const double log_arg = g.w2 * (w - g.w1) / (g.w1 * (w - g.w2));
  g.phi_i = p.phi0 - av * (g.w1 + g.w2) / (2.0 * w) -
            1.15 * g.lambda_ * w / g.dw * std::log(log_arg);
  g.b_exp = p.b_coeff * g.dw;
  r.status = g.phi_i > 0.0 ? GeometryResult::Status::Ok
                           : GeometryResult::Status::Negative;
  return r;
}

std::string describe(double w, double v_g) {
  std::ostringstream os;
  os.precision(10);
  os << "w=" << w << " nm, v_g=" << v_g << " V";
  return os.str();
}

// log(sinh(x)) for x >= 0, without overflow.
double log_sinh(double x) {
  if (x > 20.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double branch_rate(double f, double sinh_arg, double outer_k, double inner_k,
                   double window_arg, double w_over_wc) {
  const double exponent = -outer_k * std::exp(inner_k * window_arg) - w_over_wc;
  if (sinh_arg <= 700.0) {
    const double direct = f * std::sinh(sinh_arg) * std::exp(exponent);
    if (std::isfinite(direct)) return std::min(direct, kMaxRate);
  }
  const double log_rate = std::log(f) + log_sinh(sinh_arg) + exponent;
  return std::exp(std::min(log_rate, std::log(kMaxRate)));
}

}  // namespace

DeviceState DeviceState::at(double w, const ModelParams& params) {
  const double w_eff = clamp_width(w, params);
  return {params.clamped() ? w_eff : w, w_eff};
}

BarrierGeometry barrier_geometry(double w_eff, double v_g,
                                 const ModelParams& params) {
  auto r = compute_geometry(w_eff, v_g, params);
  switch (r.status) {
    case GeometryResult::Status::Ok:
      return r.geom;
    case GeometryResult::Status::BadWidth:
      throw DegenerateBarrier("width not above w1: " + describe(w_eff, v_g));
    case GeometryResult::Status::Degenerate:
      throw DegenerateBarrier("w2 outside (w1, w): " + describe(w_eff, v_g));
    case GeometryResult::Status::Negative:
      throw NegativeBarrier("barrier collapsed: " + describe(w_eff, v_g));
  }
  return r.geom;
}

bool barrier_valid(double w_eff, double v_g, const ModelParams& params) noexcept {
  return compute_geometry(w_eff, v_g, params).status == GeometryResult::Status::Ok;
}

double tunnel_current(double v_g, double w_eff, const ModelParams& params) {
  const BarrierGeometry g = barrier_geometry(w_eff, v_g, params);
  const double av = std::abs(v_g);
  // phi e^{-B sqrt(phi)} - (phi + v) e^{-B sqrt(phi + v)}, factored so the
  // difference of the two nearly equal terms at small bias is formed from
  // O(v) quantities: with d = sqrt(phi + v) - sqrt(phi),
  //   = e^{-B sqrt(phi)} * (-(phi + v) * expm1(-B d) - v).
  const double root = std::sqrt(g.phi_i);
  const double d = av / (std::sqrt(g.phi_i + av) + root);
  const double bracket =
      std::exp(-g.b_exp * root) * (-(g.phi_i + av) * std::expm1(-g.b_exp * d) - av);
  const double magnitude = params.j_prefactor / (g.dw * g.dw) * bracket;
  if (v_g > 0.0) return magnitude;
  if (v_g < 0.0) return -magnitude;
  return 0.0;
}

double state_derivative(double w_eff, double i, double v_g,
                        const ModelParams& p) {
  const double ai = std::abs(i);
  const double w_over_wc = w_eff / p.w_c;
  if (v_g > 0.0) {
    const double window = (w_eff - p.a_off) / p.w_c - ai / p.b_cur;
    return branch_rate(p.f_off, ai / p.i_off, p.eff_k_off1(), p.eff_k_off2(),
                       window, w_over_wc);
  }
  if (v_g < 0.0) {
    const double window = (p.a_on - w_eff) / p.w_c - ai / p.b_cur;
    return -branch_rate(p.f_on, ai / p.i_on, p.eff_k_on1(), p.eff_k_on2(),
                        window, w_over_wc);
  }
  return 0.0;
}

double clamp_width(double w_raw, const ModelParams& params) noexcept {
  if (!params.clamped()) return w_raw;
  return std::min(std::max(w_raw, params.w_min), params.w_max);
}

}  // namespace pickett
