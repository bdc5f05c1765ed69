#include "realgas/riemann_stiffened.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "realgas/error.hpp"

namespace realgas {

SideState SideState::make(double rho, double u, double p, const StiffenedParams& gas) {
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(u) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "invalid side state rho=" << rho << " u=" << u << " p=" << p;
    throw InvalidStateError(os.str());
  }
  if (!(p + gas.p_inf > 0.0)) {
    std::ostringstream os;
    os << "side state below cavitation limit: p=" << p << " p_inf=" << gas.p_inf;
    throw InvalidStateError(os.str());
  }
  SideState s;
  s.rho = rho;
  s.u = u;
  s.p = p;
  s.gas = gas;
  s.c = std::sqrt(gas.sound_speed_squared(rho, p));
  return s;
}

SideState mirror(const SideState& s) {
  SideState m = s;
  m.u = -s.u;
  return m;
}

RiemannFan mirror(const RiemannFan& fan) {
  RiemannFan m;
  m.left = mirror(fan.right);
  m.right = mirror(fan.left);
  m.p_star = fan.p_star;
  m.u_star = -fan.u_star;
  m.rho_star_l = fan.rho_star_r;
  m.rho_star_r = fan.rho_star_l;
  m.c_star_l = fan.c_star_r;
  m.c_star_r = fan.c_star_l;
  m.left_wave = {fan.right_wave.kind, -fan.right_wave.head, -fan.right_wave.tail};
  m.right_wave = {fan.left_wave.kind, -fan.left_wave.head, -fan.left_wave.tail};
  m.trivial = fan.trivial;
  m.iterations = fan.iterations;
  return m;
}

namespace {

double exponent_z(const StiffenedParams& g) { return (g.gamma - 1.0) / (2.0 * g.gamma); }

// Rarefaction branch; allows P* == 0 so the vacuum test can evaluate the limit.
WaveFunction rarefaction_branch(double p_star, const SideState& s) {
  const double big_p = s.p + s.gas.p_inf;
  const double ratio = (p_star + s.gas.p_inf) / big_p;
  const double z = exponent_z(s.gas);
  const double rz = std::pow(ratio, z);
  WaveFunction w;
  w.f = 2.0 * s.c / (s.gas.gamma - 1.0) * (rz - 1.0);
  // ratio^(-(gamma+1)/(2 gamma)) = ratio^z / ratio
  w.df = rz / ratio / (s.rho * s.c);
  return w;
}

WaveFunction shock_branch(double p_star, const SideState& s) {
  const double mu2 = s.gas.mu2;
  const double a = (1.0 - mu2) / s.rho;
  const double denom = p_star + mu2 * s.p + (1.0 + mu2) * s.gas.p_inf;
  if (!(denom > 0.0)) throw InvalidStateError("shock relation: non-positive radicand");
  const double root = std::sqrt(a / denom);
  WaveFunction w;
  w.f = (p_star - s.p) * root;
  w.df = root * (1.0 - (p_star - s.p) / (2.0 * denom));
  return w;
}

WaveFunction branch(double p_star, const SideState& s) {
  return p_star > s.p ? shock_branch(p_star, s) : rarefaction_branch(p_star, s);
}

struct Residual {
  double F = 0.0;
  double dF = 0.0;
};

Residual residual(double p, const SideState& l, const SideState& r, double du) {
  const WaveFunction wl = branch(p, l);
  const WaveFunction wr = branch(p, r);
  return {(wl.f + wr.f) + du, wl.df + wr.df};
}

// Two-rarefaction estimate with a common exponent and shift; exact when the
// two gases coincide.
double initial_guess(const SideState& l, const SideState& r, double du) {
  const double z = 0.5 * (exponent_z(l.gas) + exponent_z(r.gas));
  const double shift = std::max(l.gas.p_inf, r.gas.p_inf);
  const double al = 2.0 * l.c / (l.gas.gamma - 1.0);
  const double ar = 2.0 * r.c / (r.gas.gamma - 1.0);
  const double num = (al + ar) - du;
  const double den = al * std::pow(l.p + shift, -z) + ar * std::pow(r.p + shift, -z);
  const double floor_big_p =
      1e-12 * std::max(l.p + l.gas.p_inf, r.p + r.gas.p_inf);
  double big_p = num > 0.0 ? std::pow(num / den, 1.0 / z) : 0.0;
  return std::max(big_p - shift, std::max(-l.gas.p_inf, -r.gas.p_inf) + floor_big_p);
}

// Star quantities of the left wave for a known (p*, u*).
struct HalfFan {
  double rho_star;
  double c_star;
  Wave wave;
};

HalfFan left_half(const SideState& s, double p_star, double u_star) {
  const StiffenedParams& g = s.gas;
  HalfFan h;
  if (p_star > s.p) {
    const double mu2 = g.mu2;
    const double q = (1.0 + mu2) * g.p_inf;
    h.rho_star = s.rho * (p_star + mu2 * s.p + q) / (s.p + mu2 * p_star + q);
    const double mass_flux =
        std::sqrt((p_star + mu2 * s.p + q) * s.rho / (1.0 - mu2));
    const double sigma = s.u - mass_flux / s.rho;
    h.wave = {WaveKind::Shock, sigma, sigma};
  } else {
    h.rho_star = s.rho * std::pow((p_star + g.p_inf) / (s.p + g.p_inf), 1.0 / g.gamma);
  }
  h.c_star = std::sqrt(g.sound_speed_squared(h.rho_star, p_star));
  if (!(p_star > s.p)) h.wave = {WaveKind::Rarefaction, s.u - s.c, u_star - h.c_star};
  return h;
}

RiemannFan assemble(const SideState& l, const SideState& r, double p_star, int iterations,
                    bool trivial) {
  RiemannFan fan;
  fan.left = l;
  fan.right = r;
  fan.p_star = p_star;
  fan.trivial = trivial;
  fan.iterations = iterations;
  if (trivial) {
    fan.u_star = l.u;
  } else {
    const double fl = branch(p_star, l).f;
    const double fr = branch(p_star, r).f;
    fan.u_star = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
  }
  const HalfFan hl = left_half(l, p_star, fan.u_star);
  const HalfFan hr = left_half(mirror(r), p_star, -fan.u_star);
  fan.rho_star_l = hl.rho_star;
  fan.c_star_l = hl.c_star;
  fan.left_wave = hl.wave;
  fan.rho_star_r = hr.rho_star;
  fan.c_star_r = hr.c_star;
  fan.right_wave = {hr.wave.kind, -hr.wave.head, -hr.wave.tail};
  return fan;
}

}  // namespace

double f_rarefaction(double p_star, const SideState& side) {
  if (!(p_star + side.gas.p_inf > 0.0))
    throw VacuumError("rarefaction reaches the cavitation limit p* + p_inf <= 0");
  return rarefaction_branch(p_star, side).f;
}

double f_shock(double p_star, const SideState& side) { return shock_branch(p_star, side).f; }

WaveFunction wave_function(double p_star, const SideState& side) {
  if (!(p_star + side.gas.p_inf > 0.0))
    throw VacuumError("star pressure at or below the cavitation limit");
  return branch(p_star, side);
}

RiemannFan solve_star(const SideState& l, const SideState& r, const StarSolveOptions& opt) {
  if (l.u == r.u && l.p == r.p) return assemble(l, r, l.p, 0, true);

  const double du = r.u - l.u;
  const double p_min = std::max(-l.gas.p_inf, -r.gas.p_inf);

  double lo = p_min;
  if (residual(lo, l, r, du).F >= 0.0)
    throw VacuumError("Riemann data generate vacuum: rarefactions cannot meet");

  double hi = std::max(l.p, r.p);
  for (int k = 0; residual(hi, l, r, du).F < 0.0; ++k) {
    if (k > 200) throw ConvergenceError("solve_star: no upper pressure bracket", hi);
    hi = p_min + 2.0 * (hi - p_min);
  }

  const double scale_floor = 1e-300;
  double p = std::clamp(initial_guess(l, r, du), lo, hi);
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  int it = 0;
  bool converged = false;
  for (; it < opt.max_newton; ++it) {
    const Residual res = residual(p, l, r, du);
    if (res.F == 0.0) {
      converged = true;
      break;
    }
    if (res.F < 0.0) lo = p;
    else hi = p;
    double next = p - res.F / res.dF;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // Steps are measured against the distance to the cavitation limit: near it
    // the wave curves are steep and a tiny Newton step says nothing.
    const double scale = std::max(next - p_min, scale_floor);
    const double step = std::abs(next - p);
    p = next;
    if (step <= opt.tolerance * scale) {
      converged = true;
      ++it;
      break;
    }
  }
  for (int k = 0; !converged && k < opt.max_bisection; ++k, ++it) {
    p = 0.5 * (lo + hi);
    const Residual res = residual(p, l, r, du);
    if (res.F < 0.0) lo = p;
    else hi = p;
    const double scale = std::max(p - p_min, scale_floor);
    if (res.F == 0.0 || hi - lo <= opt.tolerance * scale) converged = true;
  }
  if (!converged)
    throw ConvergenceError("solve_star did not converge", residual(p, l, r, du).F);
  return assemble(l, r, p, it, false);
}

FanRegion locate(const RiemannFan& fan, double xi) {
  if (xi <= fan.u_star) {
    const Wave& w = fan.left_wave;
    if (xi < w.head) return FanRegion::Left;
    if (!w.is_shock() && xi < w.tail) return FanRegion::LeftFan;
    return FanRegion::LeftStar;
  }
  const Wave& w = fan.right_wave;
  if (xi > w.head) return FanRegion::Right;
  if (!w.is_shock() && xi > w.tail) return FanRegion::RightFan;
  return FanRegion::RightStar;
}

namespace {

// Left rarefaction interior at ray xi: u - c = xi with the left Riemann
// invariant, density and pressure on the left isentrope.
PrimitiveState left_fan_state(const SideState& s, double xi) {
  const StiffenedParams& g = s.gas;
  const double c = 2.0 / (g.gamma + 1.0) * s.c + g.mu2 * (s.u - xi);
  const double ratio = c / s.c;
  PrimitiveState w;
  w.rho = s.rho * std::pow(ratio, 2.0 / (g.gamma - 1.0));
  w.u = xi + c;
  w.p = (s.p + g.p_inf) * std::pow(ratio, 2.0 * g.gamma / (g.gamma - 1.0)) - g.p_inf;
  return w;
}

}  // namespace

FanSample sample(const RiemannFan& fan, double xi) {
  FanSample out;
  out.region = locate(fan, xi);
  switch (out.region) {
    case FanRegion::Left:
      out.state = fan.left.primitive();
      break;
    case FanRegion::LeftFan:
      out.state = left_fan_state(fan.left, xi);
      break;
    case FanRegion::LeftStar:
      out.state = {fan.rho_star_l, fan.u_star, fan.p_star};
      break;
    case FanRegion::RightStar:
      out.state = {fan.rho_star_r, fan.u_star, fan.p_star};
      break;
    case FanRegion::RightFan: {
      out.state = left_fan_state(mirror(fan.right), -xi);
      out.state.u = -out.state.u;
      break;
    }
    case FanRegion::Right:
      out.state = fan.right.primitive();
      break;
  }
  out.material = (out.region == FanRegion::Left || out.region == FanRegion::LeftFan ||
                  out.region == FanRegion::LeftStar)
                     ? Material::Left
                     : Material::Right;
  return out;
}

}  // namespace realgas
