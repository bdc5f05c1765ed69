#include "realgas/exact_ref.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "realgas/error.hpp"

namespace realgas {
namespace {

namespace odeint = boost::numeric::odeint;
using Vec2 = std::array<double, 2>;

// Scaled isentrope: y0 = rho / rho_s, y1 = (u - u_s) / c_s, independent
// variable s = p_s - p (so integration always runs forward).
struct IsentropeRhs {
  const EosModel* model;
  PrimitiveState side;
  double c_side;
  double sign;  // -1 for the left family, +1 for the right

  void operator()(const Vec2& y, Vec2& dy, double s) const {
    const double rho = y[0] * side.rho;
    if (!(rho > 1e-12 * side.rho)) throw VacuumError("isentrope approaches vacuum");
    const double p = side.p - s;
    const double c2 = sound_speed_squared(*model, rho, p);
    dy[0] = -1.0 / (c2 * side.rho);
    dy[1] = -sign / (rho * std::sqrt(c2) * c_side);
  }
};

WaveCurvePoint to_point(const PrimitiveState& side, double c_side, const EosModel& model,
                        const Vec2& y, double s) {
  WaveCurvePoint w;
  w.p = side.p - s;
  w.rho = y[0] * side.rho;
  w.u = side.u + y[1] * c_side;
  w.e = internal_energy(model, w.rho, w.p);
  return w;
}

double family_sign(Side family) { return family == Side::Left ? -1.0 : 1.0; }

WaveCurvePoint isentrope_from(const PrimitiveState& side, double c_side, const Vec2& y0,
                              double s0, double s1, const EosModel& model, Side family,
                              double rtol) {
  Vec2 y = y0;
  if (s1 != s0) {
    IsentropeRhs rhs{&model, side, c_side, family_sign(family)};
    auto stepper = odeint::make_controlled(1e-3 * rtol, rtol,
                                           odeint::runge_kutta_dopri5<Vec2>());
    // Past the cavitation limit the step size collapses against the singular
    // point instead of reaching s1.
    const double dt_min = 1e-12 * (s1 - s0);
    double s = s0, dt = 0.01 * (s1 - s0);
    while (s < s1) {
      const bool last = s + dt >= s1;
      if (last) dt = s1 - s;
      if (stepper.try_step(rhs, y, s, dt) == odeint::success && last) break;
      if (dt < dt_min) throw VacuumError("isentrope approaches vacuum");
    }
  }
  return to_point(side, c_side, model, y, s1);
}

struct ShockPoint {
  WaveCurvePoint point;
  double mass_flux;
};

ShockPoint shock_point(const PrimitiveState& side, double p_star, const EosModel& model,
                       Side family) {
  if (!(p_star > side.p)) throw DomainError("hugoniot_state requires p* > p");
  const double e = internal_energy(model, side.rho, side.p);
  const double tau = 1.0 / side.rho;
  const double mean_p = 0.5 * (p_star + side.p);
  auto energy = [&](double rho) {
    const KappaChi k = kappa_chi(model, rho);
    return std::pair{(p_star - k.chi) / k.kappa, k};
  };
  auto h = [&](double rho) {
    const auto [es, k] = energy(rho);
    const double value = es - e + (1.0 / rho - tau) * mean_p;
    const double deriv = -(k.dchi + es * k.dkappa) / k.kappa - mean_p / (rho * rho);
    return std::pair{value, deriv};
  };

  // h > 0 at rho = side.rho; the shocked density is the first sign change.
  // Stiff cold curves turn h positive again at extreme compression, so the
  // bracket is walked up from the stiffened-gas estimate instead of taken wide.
  double lo = side.rho;
  const double limit = 50.0 * side.rho;
  double guess = 0.0;
  try {
    const StiffenedParams g = local_stiffened_approx(model, side.rho);
    const double q = (1.0 + g.mu2) * g.p_inf;
    guess = side.rho * (p_star + g.mu2 * side.p + q) / (side.p + g.mu2 * p_star + q);
  } catch (const Error&) {
  }
  if (!(guess > lo && guess < limit)) guess = lo * 1.01;
  double hi = guess;
  while (!(h(hi).first < 0.0)) {
    lo = hi;
    hi = std::min(limit, lo + 0.05 * (lo - side.rho) + 0.01 * side.rho);
    if (lo >= limit) throw HugoniotError("Hugoniot root not bracketed in [rho, 50 rho]");
  }
  guess = 0.5 * (lo + hi);

  std::uintmax_t max_iter = 200;
  const double rho_star =
      boost::math::tools::newton_raphson_iterate(h, guess, lo, hi, 42, max_iter);

  ShockPoint out;
  out.point.p = p_star;
  out.point.rho = rho_star;
  out.point.e = energy(rho_star).first;
  out.mass_flux = std::sqrt((p_star - side.p) / (tau - 1.0 / rho_star));
  out.point.u = side.u + family_sign(family) * (p_star - side.p) / out.mass_flux;
  return out;
}

}  // namespace

WaveCurvePoint integrate_isentrope(const PrimitiveState& side, double p_target,
                                   const EosModel& model, Side family, double rtol) {
  if (p_target > side.p) throw DomainError("integrate_isentrope requires p_target <= p");
  const double c_side = sound_speed(model, side.rho, side.p);
  return isentrope_from(side, c_side, Vec2{1.0, 0.0}, 0.0, side.p - p_target, model, family,
                        rtol);
}

WaveCurvePoint hugoniot_state(const PrimitiveState& side, double p_star, const EosModel& model,
                              Side family) {
  return shock_point(side, p_star, model, family).point;
}

namespace {

double curve_velocity(const PrimitiveState& side, double p, const EosModel& model,
                      Side family, double rtol) {
  if (p > side.p) return shock_point(side, p, model, family).point.u;
  return integrate_isentrope(side, p, model, family, rtol).u;
}

}  // namespace

ExactSolution solve_exact(const PrimitiveState& l, const PrimitiveState& r,
                          const EosModel& ml, const EosModel& mr, const ExactOptions& opt) {
  if (!is_admissible(ml, l.rho, l.p) || !is_admissible(mr, r.rho, r.p))
    throw InvalidStateError("solve_exact: side state outside the EOS validity region");

  ExactSolution sol(l, r, ml, mr, opt);

  double p_star = l.p;
  if (l.u == r.u && l.p == r.p) {
    sol.trivial = true;
  } else {
    // R(p) = u_left(p) - u_right(p) decreases in p.
    auto R = [&](double p) {
      return curve_velocity(l, p, ml, Side::Left, opt.ode_rtol) -
             curve_velocity(r, p, mr, Side::Right, opt.ode_rtol);
    };
    const double pmin = std::min(l.p, r.p);
    const double pmax = std::max(l.p, r.p);
    double lo = pmin - 0.1 * std::abs(pmin);
    double hi = pmax + 0.1 * std::abs(pmax);
    if (!(hi > lo)) {
      lo -= 1e-3;
      hi += 1e-3;
    }

    double r_hi = R(hi);
    for (int k = 0; r_hi >= 0.0; ++k) {
      if (k > 200) throw ConvergenceError("solve_exact: no upper bracket", r_hi);
      hi += (hi - lo);
      r_hi = R(hi);
    }

    // Downward expansion; a failed evaluation means the trial pressure is past
    // the cavitation limit, so step back towards the last valid pressure.
    double valid = pmin;
    double r_lo = 0.0;
    bool found = false;
    for (int k = 0; k < 200 && !found; ++k) {
      try {
        r_lo = R(lo);
        if (r_lo > 0.0) {
          found = true;
        } else {
          valid = lo;
          lo -= (hi - lo);
        }
      } catch (const VacuumError&) {
        lo = 0.5 * (lo + valid);
      } catch (const ConvexityError&) {
        lo = 0.5 * (lo + valid);
      } catch (const DegenerateEosError&) {
        lo = 0.5 * (lo + valid);
      }
    }
    if (!found) throw VacuumError("solve_exact: rarefactions cannot meet (vacuum)");

    // Secant iteration safeguarded by the bracket.
    double x0 = lo, f0 = r_lo, x1 = hi, f1 = r_hi;
    double a = lo, b = hi;
    bool converged = false;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
      double x2 = (f1 != f0) ? x1 - f1 * (x1 - x0) / (f1 - f0) : 0.5 * (a + b);
      if (!(x2 > a && x2 < b)) x2 = 0.5 * (a + b);
      const double f2 = R(x2);
      if (f2 > 0.0) a = x2;
      else b = x2;
      const double step = std::abs(x2 - x1);
      x0 = x1;
      f0 = f1;
      x1 = x2;
      f1 = f2;
      if (f2 == 0.0 || step <= opt.tolerance * std::max(std::abs(x2), 1e-300) ||
          (b - a) <= opt.tolerance * std::max(std::abs(x2), 1e-300)) {
        converged = true;
        ++it;
        break;
      }
    }
    if (!converged) throw ConvergenceError("solve_exact did not converge", f1);
    p_star = x1;
    sol.iterations = it;
  }

  // Star states and waves.
  auto side_star = [&](const PrimitiveState& s, const EosModel& m, Side family,
                       double& rho_star, double& u_curve, Wave& wave, bool& fan) {
    const double sgn = family_sign(family);
    if (p_star > s.p) {
      const ShockPoint sp = shock_point(s, p_star, m, family);
      rho_star = sp.point.rho;
      u_curve = sp.point.u;
      const double sigma = s.u + sgn * sp.mass_flux / s.rho;
      wave = {WaveKind::Shock, sigma, sigma};
      fan = false;
    } else {
      const WaveCurvePoint w = integrate_isentrope(s, p_star, m, family, opt.ode_rtol);
      rho_star = w.rho;
      u_curve = w.u;
      fan = true;
    }
  };
  double ul = l.u, ur = r.u;
  bool fan_l = true, fan_r = true;
  side_star(l, ml, Side::Left, sol.rho_star_l, ul, sol.left_wave, fan_l);
  side_star(r, mr, Side::Right, sol.rho_star_r, ur, sol.right_wave, fan_r);
  sol.p_star = p_star;
  sol.u_star = sol.trivial ? l.u : 0.5 * (ul + ur);

  auto build_fan = [&](const PrimitiveState& s, const EosModel& m, Side family,
                       double rho_star, ExactSolution::FanTable& table) -> Wave {
    const double sgn = family_sign(family);
    const double c_side = sound_speed(m, s.rho, s.p);
    const double c_star = sound_speed(m, rho_star, p_star);
    const int n = std::max(opt.fan_points, 2);
    const double span = s.p - p_star;
    table.points.clear();
    table.speed.clear();
    IsentropeRhs rhs{&m, s, c_side, sgn};
    Vec2 y{1.0, 0.0};
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = span * i / (n - 1);
    // A fan narrower than roundoff in pressure is a single state.
    if (span > 1e-12 * s.rho * c_side * c_side) {
      auto dense = odeint::make_dense_output(1e-3 * opt.ode_rtol, opt.ode_rtol,
                                             odeint::runge_kutta_dopri5<Vec2>());
      odeint::integrate_times(dense, rhs, y, grid.begin(), grid.end(), 0.01 * span,
                              [&](const Vec2& yy, double sv) {
                                const WaveCurvePoint w = to_point(s, c_side, m, yy, sv);
                                table.points.push_back(w);
                                table.speed.push_back(w.u +
                                                      sgn * sound_speed(m, w.rho, w.p));
                              });
    } else {
      const WaveCurvePoint w = to_point(s, c_side, m, y, 0.0);
      table.points.push_back(w);
      table.speed.push_back(w.u + sgn * c_side);
    }
    return {WaveKind::Rarefaction, s.u + sgn * c_side, sol.u_star + sgn * c_star};
  };
  if (fan_l) sol.left_wave = build_fan(l, ml, Side::Left, sol.rho_star_l, sol.fan_l_);
  if (fan_r) sol.right_wave = build_fan(r, mr, Side::Right, sol.rho_star_r, sol.fan_r_);
  return sol;
}

PrimitiveState ExactSolution::fan_state(const FanTable& table, const PrimitiveState& side,
                                        const EosModel& model, Side family,
                                        double xi) const {
  const auto& sp = table.speed;
  const std::size_t n = sp.size();
  if (n < 2) return {table.points.front().rho, table.points.front().u, table.points.front().p};
  const bool increasing = sp.back() > sp.front();
  auto before = [&](double a, double b) { return increasing ? a < b : a > b; };
  std::size_t i = 0;
  while (i + 2 < n && !before(xi, sp[i + 1])) ++i;

  const double c_side = sound_speed(model, side.rho, side.p);
  const double sgn = family_sign(family);
  const WaveCurvePoint& base = table.points[i];
  const Vec2 y0{base.rho / side.rho, (base.u - side.u) / c_side};
  const double s0 = side.p - base.p;
  const double s1 = side.p - table.points[i + 1].p;
  auto point_at = [&](double s) {
    return isentrope_from(side, c_side, y0, s0, s, model, family, options_.ode_rtol);
  };
  auto g = [&](double s) {
    const WaveCurvePoint w = point_at(s);
    return w.u + sgn * sound_speed(model, w.rho, w.p) - xi;
  };
  const double g0 = sp[i] - xi;
  const double g1 = sp[i + 1] - xi;
  double s_root = s0;
  if (g0 == 0.0) {
    s_root = s0;
  } else if (g1 == 0.0) {
    s_root = s1;
  } else if ((g0 < 0.0) == (g1 < 0.0)) {
    s_root = std::abs(g0) < std::abs(g1) ? s0 : s1;
  } else {
    std::uintmax_t iters = 60;
    boost::math::tools::eps_tolerance<double> tol(46);
    const auto bracket = boost::math::tools::toms748_solve(g, s0, s1, g0, g1, tol, iters);
    s_root = 0.5 * (bracket.first + bracket.second);
  }
  const WaveCurvePoint w = point_at(s_root);
  return {w.rho, w.u, w.p};
}

FanSample ExactSolution::sample(double xi) const {
  FanSample out;
  if (xi <= u_star) {
    out.material = Material::Left;
    if (xi < left_wave.head) {
      out.region = FanRegion::Left;
      out.state = left_;
    } else if (!left_wave.is_shock() && xi < left_wave.tail) {
      out.region = FanRegion::LeftFan;
      out.state = fan_state(fan_l_, left_, model_l_, Side::Left, xi);
    } else {
      out.region = FanRegion::LeftStar;
      out.state = {rho_star_l, u_star, p_star};
    }
    return out;
  }
  out.material = Material::Right;
  if (xi > right_wave.head) {
    out.region = FanRegion::Right;
    out.state = right_;
  } else if (!right_wave.is_shock() && xi > right_wave.tail) {
    out.region = FanRegion::RightFan;
    out.state = fan_state(fan_r_, right_, model_r_, Side::Right, xi);
  } else {
    out.region = FanRegion::RightStar;
    out.state = {rho_star_r, u_star, p_star};
  }
  return out;
}

}  // namespace realgas
