#include "realgas/grp.hpp"

#include <cmath>
#include <limits>

#include "realgas/error.hpp"

namespace realgas {
namespace {

GrpSideData assemble_side(const SideState& s, double drho, double du, double dp,
                          double tds) {
  GrpSideData g;
  g.state = s;
  g.drho = drho;
  g.du = du;
  g.dp = dp;
  g.tds = tds;
  const double rc = s.rho * s.c;
  g.psi = du + dp / rc + tds / s.c;
  g.phi = du - dp / rc - tds / s.c;
  return g;
}

// gamma / (gamma - 1) written through mu^2.
double gamma_ratio(double mu2) { return (1.0 + mu2) / (2.0 * mu2); }

// rho_t in a left star region from entropy transport, S_t = -u S_x.
double entropy_density_rate(const GrpSideData& left, double rho_star, double c_star,
                            double u_star, double theta, double p_t) {
  const StiffenedParams& g = left.state.gas;
  const double tsx = entropy_rate_ratio(theta, g.mu2) * left.tds;
  return (p_t + (g.gamma - 1.0) * rho_star * u_star * tsx) / (c_star * c_star);
}

InterfaceResolution mirror(const InterfaceResolution& r) {
  InterfaceResolution m = r;
  m.state.u = -r.state.u;
  m.material = r.material == Material::Left ? Material::Right : Material::Left;
  m.Du = -r.Du;
  m.u_t = -r.u_t;
  m.fan = realgas::mirror(r.fan);
  return m;
}

WaveCoeffs unmirror(const WaveCoeffs& c) { return {-c.a, c.b, c.d}; }

void star_values(const RiemannFan& fan, Material m, double& rho, double& c) {
  if (m == Material::Left) {
    rho = fan.rho_star_l;
    c = fan.c_star_l;
  } else {
    rho = fan.rho_star_r;
    c = fan.c_star_r;
  }
}

InterfaceResolution upwind(const GrpSideData& side, InterfaceResolution res) {
  const SideState& s = side.state;
  res.kind = GrpCase::Upwind;
  res.theta = 1.0;
  res.Du = -side.dp / s.rho;
  res.Dp = -s.rho * s.c * s.c * side.du;
  to_eulerian(res, s.rho, s.c);
  res.rho_t = -(s.u * side.drho + s.rho * side.du);
  return res;
}

// x = 0 inside the left fan. Along the ray u = c; the psi relation gives
// u_t + p_t/(rho c) = 2 d(theta0) and the phi relation projected on the fan
// gives (gamma+5) u_t - (3 gamma - 1) p_t/(rho c) + 2 (gamma-1) T S_x = 0.
InterfaceResolution sonic_left(const GrpSideData& left, InterfaceResolution res) {
  const StiffenedParams& g = left.state.gas;
  const PrimitiveState& w = res.state;
  const double c0 = std::sqrt(g.sound_speed_squared(w.rho, w.p));
  const double theta = c0 / left.state.c;
  const double d = rarefaction_d(left, theta);
  const double s = entropy_rate_ratio(theta, g.mu2) * left.tds;
  res.kind = GrpCase::Sonic;
  res.theta = theta;
  res.u_t = ((3.0 * g.gamma - 1.0) * d - (g.gamma - 1.0) * s) / (2.0 * (g.gamma + 1.0));
  const double wp = 2.0 * d - res.u_t;
  res.p_t = w.rho * c0 * wp;
  res.rho_t = (res.p_t + (g.gamma - 1.0) * w.rho * w.u * s) / (c0 * c0);
  res.Du = std::numeric_limits<double>::quiet_NaN();
  res.Dp = std::numeric_limits<double>::quiet_NaN();
  return res;
}

InterfaceResolution acoustic(const GrpSideData& left, const GrpSideData& right,
                             InterfaceResolution res) {
  const SideState& l = left.state;
  const SideState& r = right.state;
  const WaveCoeffs cl{1.0, 1.0 / (l.rho * l.c), rarefaction_d(left, 1.0)};
  const GrpSideData rm = realgas::mirror(right);
  const WaveCoeffs cr = unmirror({1.0, 1.0 / (r.rho * r.c), rarefaction_d(rm, 1.0)});
  const MaterialDerivatives md = solve_contact_bridge(cl, cr);
  res.kind = GrpCase::Acoustic;
  res.theta = 1.0;
  res.Du = md.Du;
  res.Dp = md.Dp;
  double rho_s = 0.0, c_s = 0.0;
  star_values(res.fan, res.material, rho_s, c_s);
  to_eulerian(res, rho_s, c_s);
  const double u_star = res.fan.u_star;
  if (res.material == Material::Left) {
    res.rho_t = entropy_density_rate(left, rho_s, c_s, u_star, 1.0, res.p_t);
  } else {
    res.rho_t = entropy_density_rate(rm, rho_s, c_s, -u_star, 1.0, res.p_t);
  }
  return res;
}

bool zero_strength(const SideState& l, const SideState& r) {
  const double big_p = std::min(l.p + l.gas.p_inf, r.p + r.gas.p_inf);
  return std::abs(l.p - r.p) <= 1e-8 * big_p &&
         std::abs(l.u - r.u) <= 1e-8 * std::max(l.c, r.c);
}

InterfaceResolution star(const GrpSideData& left, const GrpSideData& right,
                         InterfaceResolution res) {
  const RiemannFan& fan = res.fan;
  const RiemannFan fan_m = realgas::mirror(fan);
  const GrpSideData left_m = realgas::mirror(left);
  const GrpSideData right_m = realgas::mirror(right);

  const WaveCoeffs cl = fan.left_wave.is_shock()
                            ? unmirror(shock_coeffs(left_m, fan_m).coeffs)
                            : rarefaction_coeffs(left, fan);
  const WaveCoeffs cr = fan.right_wave.is_shock()
                            ? shock_coeffs(right, fan).coeffs
                            : unmirror(rarefaction_coeffs(right_m, fan_m));
  const MaterialDerivatives md = solve_contact_bridge(cl, cr);

  res.kind = GrpCase::Star;
  res.theta = fan.left_wave.is_shock() ? 1.0 : fan.c_star_l / fan.left.c;
  res.Du = md.Du;
  res.Dp = md.Dp;
  double rho_s = 0.0, c_s = 0.0;
  star_values(fan, res.material, rho_s, c_s);
  to_eulerian(res, rho_s, c_s);

  if (res.material == Material::Left) {
    res.rho_t = fan.left_wave.is_shock()
                    ? density_time_derivative_shock(left_m, fan_m, -md.Du, md.Dp)
                    : density_time_derivative_rarefaction(left, fan, res.p_t);
  } else {
    res.rho_t = fan.right_wave.is_shock()
                    ? density_time_derivative_shock(right, fan, md.Du, md.Dp)
                    : density_time_derivative_rarefaction(right_m, fan_m, res.p_t);
  }
  return res;
}

}  // namespace

GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp) {
  const double kappa = (state.gas.gamma - 1.0) * state.rho;
  const double tds = (dp - state.c * state.c * drho) / kappa;
  return assemble_side(state, drho, du, dp, tds);
}

GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp,
                          const EosModel& exact) {
  return make_grp_side(state, drho, du, dp, exact, kappa_chi(exact, state.rho));
}

GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp,
                          const EosModel& exact, const KappaChi& k) {
  const double c2 = sound_speed_squared(exact, k, state.rho, state.p);
  const double tds = (dp - c2 * drho) / k.kappa;
  return assemble_side(state, drho, du, dp, tds);
}

GrpSideData mirror(const GrpSideData& side) {
  GrpSideData m = side;
  m.state = mirror(side.state);
  m.drho = -side.drho;
  m.dp = -side.dp;
  m.tds = -side.tds;
  m.psi = side.phi;
  m.phi = side.psi;
  return m;
}

double entropy_rate_ratio(double theta, double mu2) {
  return std::pow(theta, 1.0 / mu2 + 1.0);
}

double rarefaction_d(const GrpSideData& left, double theta) {
  const double mu2 = left.state.gas.mu2;
  const double t_half = std::pow(theta, 1.0 / (2.0 * mu2));
  const double t_full = std::pow(theta, (1.0 + mu2) / mu2);
  const double bracket =
      (1.0 + mu2) / (1.0 + 2.0 * mu2) * t_half + mu2 / (1.0 + 2.0 * mu2) * t_full;
  return bracket * left.tds - left.state.c * t_half * left.psi;
}

WaveCoeffs rarefaction_coeffs(const GrpSideData& left, const RiemannFan& fan) {
  if (fan.left_wave.is_shock())
    throw ContractViolation("rarefaction_coeffs called for a shock side");
  const double theta = fan.c_star_l / fan.left.c;
  return {1.0, 1.0 / (fan.rho_star_l * fan.c_star_l), rarefaction_d(left, theta)};
}

ShockResult shock_coeffs(const GrpSideData& right, const RiemannFan& fan) {
  if (!fan.right_wave.is_shock())
    throw ContractViolation("shock_coeffs called for a rarefaction side");
  const SideState& s = right.state;
  const StiffenedParams& g = s.gas;
  const double mu2 = g.mu2;
  const double p_star = fan.p_star;
  const double u_star = fan.u_star;
  const double rho_star = fan.rho_star_r;
  const double c_star = fan.c_star_r;

  ShockLinearization z;
  z.sigma = fan.right_wave.head;
  const double denom = p_star + mu2 * s.p + (1.0 + mu2) * g.p_inf;
  z.lambda = (1.0 - mu2) / (s.rho * denom);
  if (!(z.lambda > 0.0)) throw InvalidStateError("shock_coeffs: non-positive Lambda");
  const double root = std::sqrt(z.lambda);
  z.phi = (p_star - s.p) * root;
  z.dphi_dpstar =
      0.5 * root * (p_star + (1.0 + 2.0 * mu2) * s.p + 2.0 * (1.0 + mu2) * g.p_inf) / denom;
  z.dphi_dp =
      -0.5 * root * ((mu2 + 2.0) * p_star + mu2 * s.p + 2.0 * (1.0 + mu2) * g.p_inf) / denom;
  z.dphi_drho = -(p_star - s.p) / (2.0 * s.rho) * root;

  const double rel = z.sigma - s.u;
  z.l_p = -1.0 / s.rho + rel * z.dphi_dp;
  z.l_u = rel - s.rho * s.c * s.c * z.dphi_dp - s.rho * z.dphi_drho;
  z.l_rho = rel * z.dphi_drho;

  const double gr = gamma_ratio(mu2) * g.p_inf;
  z.h1 = -(p_star / (2.0 * mu2) + 0.5 * s.p + gr) / (rho_star * rho_star);
  z.h2 = 0.5 * (1.0 / (rho_star * mu2) - 1.0 / s.rho);
  z.h3 = (s.p / (2.0 * mu2) + 0.5 * p_star + gr) / (s.rho * s.rho);
  z.h4 = -0.5 * (1.0 / (s.rho * mu2) - 1.0 / rho_star);

  ShockResult out;
  out.lin = z;
  const double behind = z.sigma - u_star;
  out.coeffs.a = 1.0 + rho_star * behind * z.dphi_dpstar;
  out.coeffs.b = -(behind / (rho_star * c_star * c_star) + z.dphi_dpstar);
  out.coeffs.d = z.l_p * right.dp + z.l_u * right.du + z.l_rho * right.drho;
  return out;
}

MaterialDerivatives solve_contact_bridge(const WaveCoeffs& l, const WaveCoeffs& r) {
  const double t1 = l.a * r.b;
  const double t2 = r.a * l.b;
  const double det = t1 - t2;
  if (!(std::abs(det) >= 1e-14 * (std::abs(t1) + std::abs(t2))) || det == 0.0)
    throw DegenerateBridgeError("contact bridge: singular wave relations");
  return {(l.d * r.b - r.d * l.b) / det, (l.a * r.d - r.a * l.d) / det};
}

void to_eulerian(InterfaceResolution& res, double rho_star, double c_star) {
  const double u = res.state.u;
  res.u_t = res.Du + u / (rho_star * c_star * c_star) * res.Dp;
  res.p_t = res.Dp + rho_star * u * res.Du;
}

double density_time_derivative_rarefaction(const GrpSideData& left, const RiemannFan& fan,
                                           double p_t) {
  if (fan.left_wave.is_shock())
    throw ContractViolation("entropy-transport density rate needs a left rarefaction");
  const double theta = fan.c_star_l / fan.left.c;
  return entropy_density_rate(left, fan.rho_star_l, fan.c_star_l, fan.u_star, theta, p_t);
}

double density_time_derivative_shock(const GrpSideData& right, const RiemannFan& fan,
                                     double Du, double Dp) {
  const ShockResult sr = shock_coeffs(right, fan);
  const ShockLinearization& z = sr.lin;
  const SideState& s = right.state;
  const double u_star = fan.u_star;
  const double sigma = z.sigma;
  const double c_star2 = fan.c_star_r * fan.c_star_r;
  const double ahead = s.u - sigma;
  const double rhs = u_star * (ahead * z.h3 * right.drho +
                               (s.rho * z.h3 + s.rho * s.c * s.c * z.h4) * right.du +
                               ahead * z.h4 * right.dp);
  const double coef = (u_star - sigma) * z.h1;
  if (coef == 0.0) throw DegenerateBridgeError("density rate: degenerate Hugoniot relation");
  return (rhs - (sigma / c_star2 * z.h1 + u_star * z.h2) * Dp -
          z.h2 * (u_star - sigma) * fan.rho_star_r * u_star * Du) /
         coef;
}

TimeDerivatives lax_wendroff(const GrpSideData& side) {
  const SideState& s = side.state;
  TimeDerivatives t;
  t.rho_t = -(s.u * side.drho + s.rho * side.du);
  t.u_t = -(s.u * side.du + side.dp / s.rho);
  t.p_t = -(s.u * side.dp + s.rho * s.c * s.c * side.du);
  return t;
}

InterfaceResolution solve_grp(const GrpSideData& left, const GrpSideData& right) {
  InterfaceResolution res;
  res.fan = solve_star(left.state, right.state);
  const FanSample at0 = sample(res.fan, 0.0);
  res.state = at0.state;
  res.material = at0.material;

  switch (at0.region) {
    case FanRegion::Left:
      return upwind(left, res);
    case FanRegion::Right:
      return upwind(right, res);
    case FanRegion::LeftFan:
      return sonic_left(left, res);
    case FanRegion::RightFan:
      return mirror(sonic_left(mirror(right), mirror(res)));
    case FanRegion::LeftStar:
    case FanRegion::RightStar:
      break;
  }
  if (zero_strength(left.state, right.state)) return acoustic(left, right, res);
  try {
    return star(left, right, res);
  } catch (const DegenerateBridgeError&) {
    return acoustic(left, right, res);
  }
}

}  // namespace realgas
