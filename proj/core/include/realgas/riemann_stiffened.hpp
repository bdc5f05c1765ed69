#pragma once

#include "realgas/eos.hpp"
#include "realgas/state.hpp"

namespace realgas {

/// One side of a two-material Riemann problem with its own stiffened gas.
struct SideState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
  StiffenedParams gas;
  double c = 0.0;  // sqrt(gamma (p + p_inf) / rho)

  /// Validates rho > 0 and p + p_inf > 0; throws InvalidStateError otherwise.
  static SideState make(double rho, double u, double p, const StiffenedParams& gas);
  static SideState make(const PrimitiveState& w, const StiffenedParams& gas) {
    return make(w.rho, w.u, w.p, gas);
  }

  PrimitiveState primitive() const { return {rho, u, p}; }

  friend bool operator==(const SideState&, const SideState&) = default;
};

/// x -> -x reflection: u changes sign, thermodynamics unchanged.
SideState mirror(const SideState& s);

enum class WaveKind { Rarefaction, Shock };

/// A nonlinear wave of the fan. For shocks head == tail == shock speed.
struct Wave {
  WaveKind kind = WaveKind::Rarefaction;
  double head = 0.0;
  double tail = 0.0;

  bool is_shock() const { return kind == WaveKind::Shock; }
  friend bool operator==(const Wave&, const Wave&) = default;
};

struct RiemannFan {
  SideState left;
  SideState right;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  double c_star_l = 0.0;
  double c_star_r = 0.0;
  Wave left_wave;
  Wave right_wave;
  bool trivial = false;  // equal u and p: contact only
  int iterations = 0;

  friend bool operator==(const RiemannFan&, const RiemannFan&) = default;
};

/// Swaps the sides and reflects all velocities and speeds.
RiemannFan mirror(const RiemannFan& fan);

/// Regions of the self-similar solution, ordered left to right.
enum class FanRegion { Left, LeftFan, LeftStar, RightStar, RightFan, Right };

/// Region containing the ray xi. The contact ray xi == u_star belongs to the left.
FanRegion locate(const RiemannFan& fan, double xi);

struct FanSample {
  PrimitiveState state;
  Material material = Material::Left;
  FanRegion region = FanRegion::Left;
};

double f_rarefaction(double p_star, const SideState& side);
double f_shock(double p_star, const SideState& side);

/// f_K(p*) on the branch selected by p* versus the side pressure, and its
/// derivative in p*.
struct WaveFunction {
  double f = 0.0;
  double df = 0.0;
};
WaveFunction wave_function(double p_star, const SideState& side);

struct StarSolveOptions {
  double tolerance = 1e-12;  // relative change in p*
  int max_newton = 100;
  int max_bisection = 400;
};

/// Star state of the two-material problem. Throws VacuumError if the two
/// rarefactions cannot meet and ConvergenceError if the iteration stalls.
RiemannFan solve_star(const SideState& left, const SideState& right,
                      const StarSolveOptions& options = {});

FanSample sample(const RiemannFan& fan, double xi);

}  // namespace realgas
