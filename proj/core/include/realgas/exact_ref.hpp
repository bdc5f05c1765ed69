#pragma once

#include <vector>

#include "realgas/eos.hpp"
#include "realgas/riemann_stiffened.hpp"
#include "realgas/state.hpp"

namespace realgas {

/// A point on a wave curve through a side state.
struct WaveCurvePoint {
  double p = 0.0;
  double rho = 0.0;
  double e = 0.0;
  double u = 0.0;
};

struct ExactOptions {
  double ode_rtol = 1e-10;
  double tolerance = 1e-10;  // relative change of p* in the secant iteration
  int max_iterations = 200;
  int fan_points = 512;      // dense rarefaction output used for sampling
};

/// Isentrope through `side` down to p_target (p_target <= side.p), integrating
/// drho/dp = 1/c^2 and du/dp = -1/(rho c) (left family) or +1/(rho c) (right).
WaveCurvePoint integrate_isentrope(const PrimitiveState& side, double p_target,
                                   const EosModel& model, Side family,
                                   double rtol = 1e-10);

/// Shocked state behind a shock of strength p_star > side.p.
WaveCurvePoint hugoniot_state(const PrimitiveState& side, double p_star,
                              const EosModel& model, Side family);

/// Exact solution of the general-EOS Riemann problem.
class ExactSolution {
public:
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  Wave left_wave;
  Wave right_wave;
  bool trivial = false;
  int iterations = 0;

  /// State on the ray xi = x / t.
  FanSample sample(double xi) const;

  const PrimitiveState& left() const { return left_; }
  const PrimitiveState& right() const { return right_; }
  const EosModel& left_model() const { return model_l_; }
  const EosModel& right_model() const { return model_r_; }

private:
  friend ExactSolution solve_exact(const PrimitiveState&, const PrimitiveState&,
                                   const EosModel&, const EosModel&, const ExactOptions&);
  ExactSolution(const PrimitiveState& l, const PrimitiveState& r, const EosModel& ml,
                const EosModel& mr, const ExactOptions& opt)
      : left_(l), right_(r), model_l_(ml), model_r_(mr), options_(opt) {}

  // Dense isentrope of a rarefaction, ordered from the head (side state) to the tail.
  struct FanTable {
    std::vector<WaveCurvePoint> points;
    std::vector<double> speed;  // characteristic speed u -/+ c at each point
  };
  PrimitiveState fan_state(const FanTable& table, const PrimitiveState& side,
                           const EosModel& model, Side family, double xi) const;

  PrimitiveState left_;
  PrimitiveState right_;
  EosModel model_l_;
  EosModel model_r_;
  ExactOptions options_;
  FanTable fan_l_;
  FanTable fan_r_;
};

ExactSolution solve_exact(const PrimitiveState& left, const PrimitiveState& right,
                          const EosModel& model_l, const EosModel& model_r,
                          const ExactOptions& options = {});

inline ExactSolution solve_exact(const PrimitiveState& left, const PrimitiveState& right,
                                 const EosModel& model, const ExactOptions& options = {}) {
  return solve_exact(left, right, model, model, options);
}

}  // namespace realgas
