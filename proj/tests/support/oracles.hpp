#pragma once

#include <array>

#include "realgas/eos.hpp"
#include "realgas/state.hpp"

namespace realgas::testing {

struct Gas {
  double gamma = 1.4;
  double p_inf = 0.0;
};

// Wave curve in the A/B form of the textbook stiffened-gas solver, written
// independently of the library's f_shock / f_rarefaction.
double textbook_f(double p, const PrimitiveState& side, Gas g);

struct StarOracle {
  double p = 0.0;
  double u = 0.0;
  double rho_l = 0.0;
  double rho_r = 0.0;
};

// Plain bisection on f_L + f_R + du over a wide bracket (200 halvings).
StarOracle bisection_star(const PrimitiveState& l, Gas gl, const PrimitiveState& r, Gas gr);

// Star state of a single-material general-EOS problem: fixed-step RK4 along
// isentropes in p, Hugoniot density by scan plus bisection, outer bisection
// in p*. Deliberately simple and slow.
struct GeneralStar {
  double p = 0.0;
  double u = 0.0;
};
GeneralStar general_star(const PrimitiveState& l, const PrimitiveState& r, const EosModel& eos);

// Primitive-variable Lax-Wendroff derivatives -A(W) W' with the given c^2.
struct Rates {
  double rho_t = 0.0;
  double u_t = 0.0;
  double p_t = 0.0;
};
Rates lax_wendroff_oracle(const PrimitiveState& w, double drho, double du, double dp, double c2);

// Finite-difference GRP oracle: first-order Godunov on piecewise-linear data
// (one stiffened gas, discontinuity at x = 0), time derivative at x = 0 from
// (with slopes - without slopes) / t, double Richardson extrapolated in t and
// in the resolution. With ray_offset = 0 the value at x = 0 is the Godunov
// interface state. First-order Godunov carries a local glitch at a sonic
// interface, so inside a transonic fan set ray_offset > 0: the value is then
// the mean over the rays x = +-ray_offset t, interpolated between cell centres.
struct FdCase {
  StiffenedParams gas;
  PrimitiveState left;
  PrimitiveState right;
  std::array<double, 3> left_slope{};   // d(rho, u, p)/dx
  std::array<double, 3> right_slope{};
  double ray_offset = 0.0;
};
Rates fd_grp_oracle(const FdCase& c, int cells, double t);

}  // namespace realgas::testing
