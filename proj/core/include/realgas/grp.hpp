#pragma once

#include "realgas/eos.hpp"
#include "realgas/riemann_stiffened.hpp"
#include "realgas/state.hpp"

namespace realgas {

/// Limiting state of one side of the generalized Riemann problem together
/// with its primitive slopes and the derived characteristic slopes.
struct GrpSideData {
  SideState state;
  double drho = 0.0;
  double du = 0.0;
  double dp = 0.0;
  double tds = 0.0;  // T S' from the Gibbs relation
  double psi = 0.0;  // u' + p'/(rho c) + T S'/c
  double phi = 0.0;  // u' - p'/(rho c) - T S'/c

  friend bool operator==(const GrpSideData&, const GrpSideData&) = default;
};

/// Side data whose entropy slope is measured with the stiffened gas itself.
GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp);

/// Side data whose entropy slope is measured with the exact EOS,
/// kappa T S' = p' - (kappa' e + chi' + kappa p / rho^2) rho'.
GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp,
                          const EosModel& exact);

/// As above with k = kappa_chi(exact, state.rho) already evaluated.
GrpSideData make_grp_side(const SideState& state, double drho, double du, double dp,
                          const EosModel& exact, const KappaChi& k);

/// x -> -x: u and u' keep their roles, rho' and p' flip, psi and phi swap.
GrpSideData mirror(const GrpSideData& side);

/// a (Du/Dt)* + b (Dp/Dt)* = d
struct WaveCoeffs {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;

  friend bool operator==(const WaveCoeffs&, const WaveCoeffs&) = default;
};

/// theta^(1/mu^2 + 1): growth of T S_x across a centred rarefaction.
double entropy_rate_ratio(double theta, double mu2);

/// Characteristic relation through the left rarefaction, evaluated at the ray
/// where the sound speed is theta * c_L (theta = c*L/c_L at the fan tail).
double rarefaction_d(const GrpSideData& left, double theta);

/// Left rarefaction of the fan, resolved at its tail.
WaveCoeffs rarefaction_coeffs(const GrpSideData& left, const RiemannFan& fan);

struct ShockLinearization {
  double sigma = 0.0;
  double lambda = 0.0;
  double phi = 0.0;
  double dphi_dpstar = 0.0;
  double dphi_dp = 0.0;
  double dphi_drho = 0.0;
  double l_p = 0.0;
  double l_u = 0.0;
  double l_rho = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double h4 = 0.0;
};

struct ShockResult {
  WaveCoeffs coeffs;
  ShockLinearization lin;
};

/// Right shock of the fan, tracked along its trajectory.
ShockResult shock_coeffs(const GrpSideData& right, const RiemannFan& fan);

/// How the interface ray was resolved.
enum class GrpCase {
  Upwind,    // whole fan on one side of x = 0
  Star,      // x = 0 in a star region, full wave resolution
  Acoustic,  // zero-strength fan, characteristic relations only
  Sonic,     // x = 0 inside a rarefaction fan
};

struct InterfaceResolution {
  PrimitiveState state;
  Material material = Material::Left;
  GrpCase kind = GrpCase::Star;
  double Du = 0.0;  // (Du/Dt)*, NaN in the sonic case
  double Dp = 0.0;  // (Dp/Dt)*, NaN in the sonic case
  double u_t = 0.0;
  double p_t = 0.0;
  double rho_t = 0.0;
  double theta = 1.0;  // c*L / c_L when the left wave is a rarefaction
  RiemannFan fan;
};

struct MaterialDerivatives {
  double Du = 0.0;
  double Dp = 0.0;
};

/// Solves the 2x2 system of the two wave relations. Throws DegenerateBridgeError
/// when the system is singular to working precision.
MaterialDerivatives solve_contact_bridge(const WaveCoeffs& left, const WaveCoeffs& right);

/// (du/dt)* and (dp/dt)* from the material derivatives at a star state.
void to_eulerian(InterfaceResolution& res, double rho_star, double c_star);

/// Density derivative at a star state: entropy transport through a left
/// rarefaction (u* >= 0) or the Hugoniot relation across a right shock (u* < 0).
double density_time_derivative_rarefaction(const GrpSideData& left, const RiemannFan& fan,
                                           double p_t);
double density_time_derivative_shock(const GrpSideData& right, const RiemannFan& fan,
                                     double Du, double Dp);

InterfaceResolution solve_grp(const GrpSideData& left, const GrpSideData& right);

/// Lax-Wendroff time derivatives -A(W) W' of the primitive Euler system with
/// the stiffened sound speed of the side.
struct TimeDerivatives {
  double rho_t = 0.0;
  double u_t = 0.0;
  double p_t = 0.0;
};
TimeDerivatives lax_wendroff(const GrpSideData& side);

}  // namespace realgas
