#include <gtest/gtest.h>

#include <cmath>

#include "checks.hpp"
#include "oracles.hpp"
#include "realgas/error.hpp"
#include "realgas/riemann_stiffened.hpp"

namespace realgas {
namespace {

using testing::Gas;
using testing::Rng;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SideState polytropic(double rho, double u, double p) {
  return SideState::make(rho, u, p, StiffenedParams::make(1.4, 0.0));
}

TEST(Riemann, SideStateValidation) {
  const StiffenedParams g = StiffenedParams::make(1.4, 0.5);
  EXPECT_THROW(SideState::make(-1.0, 0.0, 1.0, g), InvalidStateError);
  EXPECT_THROW(SideState::make(1.0, 0.0, -0.6, g), InvalidStateError);
  const SideState s = SideState::make(2.0, 0.3, 1.0, g);
  EXPECT_DOUBLE_EQ(s.c, std::sqrt(1.4 * 1.5 / 2.0));
  EXPECT_EQ(mirror(mirror(s)), s);
  EXPECT_EQ(mirror(s).u, -0.3);
}

TEST(Riemann, SodStarState) {
  // Star state of Sod's tube, frozen from the bisection oracle.
  const RiemannFan fan = solve_star(polytropic(1.0, 0.0, 1.0), polytropic(0.125, 0.0, 0.1));
  const testing::StarOracle o =
      testing::bisection_star({1.0, 0.0, 1.0}, Gas{}, {0.125, 0.0, 0.1}, Gas{});
  EXPECT_NEAR(fan.p_star, o.p, 1e-12 * o.p);
  EXPECT_NEAR(fan.p_star, 0.30313017805064679, 1e-13);
  EXPECT_NEAR(fan.u_star, 0.92745262004894991, 1e-13);
  EXPECT_FALSE(fan.left_wave.is_shock());
  EXPECT_TRUE(fan.right_wave.is_shock());
  EXPECT_NEAR(fan.rho_star_l, o.rho_l, 1e-12);
  EXPECT_NEAR(fan.rho_star_r, o.rho_r, 1e-12);
}

TEST(Riemann, WaveFunctionBranchesAndDerivative) {
  const SideState s = SideState::make(1.3, 0.0, 2.0, StiffenedParams::make(3.0, 0.7));
  for (double p : {0.2, 1.0, 1.9, 2.0, 2.1, 5.0, 40.0}) {
    const WaveFunction w = wave_function(p, s);
    EXPECT_DOUBLE_EQ(w.f, p > s.p ? f_shock(p, s) : f_rarefaction(p, s));
    EXPECT_NEAR(w.f, testing::textbook_f(p, s.primitive(), Gas{3.0, 0.7}), 1e-13);
    const double h = 1e-6 * (p + 0.7);
    const double fd = (wave_function(p + h, s).f - wave_function(p - h, s).f) / (2.0 * h);
    EXPECT_NEAR(w.df, fd, 1e-6 * std::abs(fd));
  }
}

TEST(Riemann, ConvergedResidualIsTiny) {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const testing::RiemannCase c = testing::random_two_material(rng);
    const RiemannFan fan = solve_star(c.left, c.right);
    const double F = wave_function(fan.p_star, c.left).f + wave_function(fan.p_star, c.right).f +
                     (c.right.u - c.left.u);
    const double scale =
        std::max({std::abs(c.left.u), std::abs(c.right.u), c.left.c, c.right.c});
    EXPECT_LE(std::abs(F), 1e-10 * scale) << i;
  }
}

TEST(Riemann, ShockRelationsAndFanInvariants) {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const testing::RiemannCase c = testing::random_two_material(rng);
    const RiemannFan fan = solve_star(c.left, c.right);
    EXPECT_LE(testing::shock_residual(fan), 1e-9) << i;
    EXPECT_LE(testing::fan_invariant_drift(fan), 1e-10) << i;
  }
}

TEST(Riemann, MirrorSymmetry) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const testing::RiemannCase c = testing::random_two_material(rng);
    const RiemannFan a = solve_star(c.left, c.right);
    const RiemannFan b = solve_star(mirror(c.right), mirror(c.left));
    EXPECT_EQ(a.p_star, b.p_star) << i;
    EXPECT_EQ(a.u_star, -b.u_star) << i;
    EXPECT_EQ(a.rho_star_l, b.rho_star_r) << i;
    EXPECT_EQ(a.left_wave.head, -b.right_wave.head) << i;
    for (double xi : {-1.5, -0.3, 0.0, 0.4, 2.0}) {
      const FanSample sa = sample(a, xi);
      const FanSample sb = sample(b, -xi);
      if (xi == a.u_star) continue;  // contact ray belongs to the left on both sides
      EXPECT_EQ(sa.state.rho, sb.state.rho);
      EXPECT_EQ(sa.state.p, sb.state.p);
      EXPECT_EQ(sa.state.u, -sb.state.u);
    }
  }
}

TEST(Riemann, SingleMaterialMatchesTextbookSolver) {
  Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const testing::RiemannCase c = testing::random_single_material(rng);
    const RiemannFan fan = solve_star(c.left, c.right);
    const Gas g{c.left.gas.gamma, c.left.gas.p_inf};
    const testing::StarOracle o =
        testing::bisection_star(c.left.primitive(), g, c.right.primitive(), g);
    const double vel = std::max({std::abs(c.left.u), std::abs(c.right.u), c.left.c, c.right.c});
    EXPECT_LE(std::abs(fan.p_star - o.p), 1e-12 * (std::abs(o.p) + g.p_inf)) << i;
    EXPECT_LE(std::abs(fan.u_star - o.u), 1e-12 * vel) << i;
    EXPECT_LE(rel(fan.rho_star_l, o.rho_l), 1e-12) << i;
    EXPECT_LE(rel(fan.rho_star_r, o.rho_r), 1e-12) << i;
  }
}

TEST(Riemann, TrivialProblemIsContactOnly) {
  const StiffenedParams a = StiffenedParams::make(1.4, 0.0);
  const StiffenedParams b = StiffenedParams::make(4.4, 6.0);
  const RiemannFan fan =
      solve_star(SideState::make(1.0, 0.2, 1.0, a), SideState::make(3.0, 0.2, 1.0, b));
  EXPECT_TRUE(fan.trivial);
  EXPECT_EQ(fan.p_star, 1.0);
  EXPECT_EQ(fan.u_star, 0.2);
  EXPECT_EQ(fan.rho_star_l, 1.0);
  EXPECT_EQ(fan.rho_star_r, 3.0);
}

TEST(Riemann, RegionsAreOrderedAndContactRayIsLeft) {
  const RiemannFan fan = solve_star(polytropic(1.0, 0.0, 1.0), polytropic(0.125, 0.0, 0.1));
  EXPECT_EQ(locate(fan, -10.0), FanRegion::Left);
  EXPECT_EQ(locate(fan, 0.5 * (fan.left_wave.head + fan.left_wave.tail)), FanRegion::LeftFan);
  EXPECT_EQ(locate(fan, fan.u_star - 1e-3), FanRegion::LeftStar);
  EXPECT_EQ(locate(fan, fan.u_star), FanRegion::LeftStar);
  EXPECT_EQ(sample(fan, fan.u_star).material, Material::Left);
  EXPECT_EQ(locate(fan, fan.u_star + 1e-3), FanRegion::RightStar);
  EXPECT_EQ(sample(fan, fan.u_star + 1e-3).material, Material::Right);
  EXPECT_EQ(locate(fan, 10.0), FanRegion::Right);
}

TEST(Riemann, VacuumIsReported) {
  EXPECT_THROW(solve_star(polytropic(1.0, -10.0, 0.4), polytropic(1.0, 10.0, 0.4)), VacuumError);
}

TEST(Riemann, StrongStiffenedShocks) {
  // Water-like stiffened gas hit hard from the left; shocks both ways.
  const StiffenedParams w = StiffenedParams::make(4.4, 6000.0);
  const RiemannFan fan =
      solve_star(SideState::make(1.0, 100.0, 1.0, w), SideState::make(1.0, -100.0, 1.0, w));
  EXPECT_TRUE(fan.left_wave.is_shock());
  EXPECT_TRUE(fan.right_wave.is_shock());
  EXPECT_NEAR(fan.u_star, 0.0, 1e-9);
  EXPECT_LE(testing::shock_residual(fan), 1e-9);
}

}  // namespace
}  // namespace realgas
