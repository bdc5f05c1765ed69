#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "realgas/error.hpp"
#include "realgas/fv_scheme.hpp"
#include "realgas/problems.hpp"
#include "rng.hpp"

namespace realgas {
namespace {

using testing::Rng;

double rel_diff(const ConservedState& a, const ConservedState& b, const ConservedState& scale) {
  auto r = [](double x, double y, double s) { return std::abs(x - y) / std::max(std::abs(s), 1e-300); };
  return std::max({r(a.rho, b.rho, scale.rho), r(a.rho_u, b.rho_u, std::abs(scale.rho_u) + scale.rho),
                   r(a.rho_v, b.rho_v, std::abs(scale.rho_v) + scale.rho),
                   r(a.rho_E, b.rho_E, scale.rho_E)});
}

ConservedState minus(const ConservedState& a, const ConservedState& b) {
  return {a.rho - b.rho, a.rho_u - b.rho_u, a.rho_v - b.rho_v, a.rho_E - b.rho_E};
}

Field1D periodic_wave(int n, const EosModel& eos) {
  Field1D f;
  f.n = n;
  f.x_lo = 0.0;
  f.dx = 1.0 / n;
  f.eos = eos;
  f.bc_lo = f.bc_hi = BoundaryKind::Periodic;
  for (int i = 0; i < n; ++i) {
    const double x = f.x_center(i);
    const double rho = 1.0 + 0.3 * std::sin(2.0 * std::numbers::pi * x);
    f.cells.push_back(to_conserved(eos, {rho, 0.5 + 0.1 * std::cos(2.0 * std::numbers::pi * x),
                                         0.2, 1.0 + 0.2 * std::sin(4.0 * std::numbers::pi * x)}));
  }
  return f;
}

Field2D periodic_wave_2d(int n, const EosModel& eos) {
  Field2D f;
  f.nx = f.ny = n;
  f.dx = f.dy = 1.0 / n;
  f.eos = eos;
  f.bc = {BoundaryKind::Periodic, BoundaryKind::Periodic, BoundaryKind::Periodic,
          BoundaryKind::Periodic};
  f.cells.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double x = f.x_center(i), y = f.y_center(j);
      const double s = std::sin(2.0 * std::numbers::pi * (x + 2.0 * y));
      f.cells[f.index(i, j)] = to_conserved(eos, {1.0 + 0.3 * s, 0.4, -0.3, 1.0 + 0.2 * s});
    }
  return f;
}

TEST(Fv, ConservedRoundTrip) {
  const EosModel eos = load_problem("shyue").eos;
  const FlowState w{1.7, 0.3, -0.2, 10.0};
  const FlowState back = to_primitive(eos, to_conserved(eos, w));
  EXPECT_NEAR(back.rho, w.rho, 1e-15);
  EXPECT_NEAR(back.u, w.u, 1e-15);
  EXPECT_NEAR(back.v, w.v, 1e-15);
  EXPECT_NEAR(back.p, w.p, 1e-12);
  EXPECT_THROW(to_primitive(eos, {-1.0, 0.0, 0.0, 1.0}), InvalidStateError);
  EXPECT_THROW(to_primitive(eos, {1.0, std::nan(""), 0.0, 1.0}), InvalidStateError);
}

TEST(Fv, Minmod) {
  EXPECT_EQ(minmod(1.0, 2.0, 3.0), 1.0);
  EXPECT_EQ(minmod(-1.0, -0.5, -3.0), -0.5);
  EXPECT_EQ(minmod(1.0, -2.0, 3.0), 0.0);
  EXPECT_EQ(minmod(0.0, 2.0, 3.0), 0.0);
}

TEST(Fv, FluxConsistencyForEqualStates) {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const double gamma = rng.uniform(1.1, 5.0), p_inf = rng.uniform(0.0, 3.0);
    const StiffenedParams g = StiffenedParams::make(gamma, p_inf);
    const FlowState w{rng.log_uniform(0.1, 10.0), rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0),
                      rng.log_uniform(0.1, 10.0)};
    const ConservedState exact = euler_flux(w, g.internal_energy(w.rho, w.p));
    const SideState s = SideState::make(w.rho, w.u, w.p, g);
    const ConservedState a = interface_flux_godunov(s, s, w.v, w.v);
    const GrpSideData d = make_grp_side(s, 0.0, 0.0, 0.0);
    const ConservedState b = interface_flux_grp(d, d, w.v, w.v, 0.01);
    const ConservedState c = interface_flux_exact(EosModel::stiffened(gamma, p_inf), w, w);
    const ConservedState scale{std::abs(exact.rho) + w.rho, std::abs(exact.rho_u) + w.p,
                               std::abs(exact.rho_v), std::abs(exact.rho_E) + 1.0};
    EXPECT_LE(rel_diff(a, exact, scale), 1e-14) << i;
    EXPECT_LE(rel_diff(b, exact, scale), 1e-14) << i;
    EXPECT_LE(rel_diff(c, exact, scale), 1e-12) << i;
  }
}

TEST(Fv, TransverseVelocityIsUpwinded) {
  const SideState s = SideState::make(1.0, 0.5, 1.0, StiffenedParams::make(1.4, 0.0));
  const ConservedState f = interface_flux_godunov(s, s, 2.0, -7.0);
  EXPECT_DOUBLE_EQ(f.rho_v, f.rho * 2.0);
  const ConservedState g = interface_flux_godunov(mirror(s), mirror(s), 2.0, -7.0);
  EXPECT_DOUBLE_EQ(g.rho_v, g.rho * -7.0);
}

TEST(Fv, BoundaryGhosts) {
  const std::vector<FlowState> w{{1.0, 0.5, 0.1, 2.0}, {2.0, 0.6, 0.2, 3.0}, {3.0, 0.7, 0.3, 4.0}};
  const std::vector<Slope> s{{0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}, {0.7, 0.8, 0.9}};
  const Ghosts t = apply_bc(w, s, BoundaryKind::Transmissive, BoundaryKind::Transmissive);
  EXPECT_EQ(t.lo[0], w[0]);
  EXPECT_EQ(t.lo[1], w[0]);
  EXPECT_EQ(t.hi[1], w[2]);
  EXPECT_EQ(t.lo_slope[0], Slope{});
  const Ghosts r = apply_bc(w, s, BoundaryKind::Reflective, BoundaryKind::Reflective);
  EXPECT_EQ(r.lo[0], (FlowState{1.0, -0.5, 0.1, 2.0}));
  EXPECT_EQ(r.lo[1], (FlowState{2.0, -0.6, 0.2, 3.0}));
  EXPECT_EQ(r.hi[0], (FlowState{3.0, -0.7, 0.3, 4.0}));
  EXPECT_EQ(r.lo_slope[0], (Slope{-0.1, 0.2, -0.3}));
  const Ghosts p = apply_bc(w, s, BoundaryKind::Periodic, BoundaryKind::Periodic);
  EXPECT_EQ(p.lo[0], w[2]);
  EXPECT_EQ(p.lo[1], w[1]);
  EXPECT_EQ(p.hi[0], w[0]);
  EXPECT_EQ(p.hi[1], w[1]);
  EXPECT_EQ(p.hi_slope[1], s[1]);
  EXPECT_THROW(apply_bc({}, {}, BoundaryKind::Periodic, BoundaryKind::Periodic), DomainError);
}

TEST(Fv, ReconstructionIsLimited) {
  Field1D f = periodic_wave(50, EosModel::polytropic(1.4));
  const std::vector<Slope> s = reconstruct(f, 1.9);
  ASSERT_EQ(s.size(), 50u);
  for (int i = 0; i < 50; ++i) {
    const FlowState wm = to_primitive(f.eos, f.cells[(i + 49) % 50]);
    const FlowState w0 = to_primitive(f.eos, f.cells[i]);
    const FlowState wp = to_primitive(f.eos, f.cells[(i + 1) % 50]);
    const double back = (w0.rho - wm.rho) / f.dx, fwd = (wp.rho - w0.rho) / f.dx;
    if (back * fwd <= 0.0) {
      EXPECT_EQ(s[i].rho, 0.0);
    } else {
      EXPECT_LE(std::abs(s[i].rho), 1.9 * std::min(std::abs(back), std::abs(fwd)) + 1e-12);
      EXPECT_GT(s[i].rho * back, 0.0);
    }
  }
}

TEST(Fv, CflStep) {
  const Field1D f = periodic_wave(40, EosModel::polytropic(1.4));
  double smax = 0.0;
  for (const ConservedState& q : f.cells) {
    const FlowState w = to_primitive(f.eos, q);
    smax = std::max(smax, std::abs(w.u) + sound_speed(f.eos, w.rho, w.p));
  }
  EXPECT_DOUBLE_EQ(cfl_dt(f, 0.5), 0.5 * f.dx / smax);
  EXPECT_THROW(cfl_dt(f, 1.5), DomainError);
}

class PeriodicConservation : public ::testing::TestWithParam<Scheme> {};

TEST_P(PeriodicConservation, OneDimension) {
  SchemeOptions opt;
  opt.scheme = GetParam();
  const EosModel eos = load_problem("shyue").eos;
  Field1D f = periodic_wave(64, eos);
  const ConservedState t0 = totals(f);
  for (int k = 0; k < 100; ++k) advance_1d(f, cfl_dt(f, 0.5), opt);
  const ConservedState t1 = totals(f);
  EXPECT_LE(std::abs(t1.rho - t0.rho), 1e-13 * t0.rho);
  EXPECT_LE(std::abs(t1.rho_u - t0.rho_u), 1e-13 * std::abs(t0.rho_u));
  EXPECT_LE(std::abs(t1.rho_v - t0.rho_v), 1e-13 * std::abs(t0.rho_v));
  EXPECT_LE(std::abs(t1.rho_E - t0.rho_E), 1e-13 * std::abs(t0.rho_E));
}

TEST_P(PeriodicConservation, TwoDimensions) {
  SchemeOptions opt;
  opt.scheme = GetParam();
  Field2D f = periodic_wave_2d(24, EosModel::stiffened(1.4, 0.3));
  const ConservedState t0 = totals(f);
  for (int k = 0; k < 100; ++k) advance_2d(f, cfl_dt(f, 0.5), opt);
  const ConservedState t1 = totals(f);
  EXPECT_LE(std::abs(t1.rho - t0.rho), 1e-13 * t0.rho);
  EXPECT_LE(std::abs(t1.rho_u - t0.rho_u), 1e-13 * std::abs(t0.rho_u));
  EXPECT_LE(std::abs(t1.rho_v - t0.rho_v), 1e-13 * std::abs(t0.rho_v));
  EXPECT_LE(std::abs(t1.rho_E - t0.rho_E), 1e-13 * std::abs(t0.rho_E));
}

INSTANTIATE_TEST_SUITE_P(Schemes, PeriodicConservation,
                         ::testing::Values(Scheme::Godunov, Scheme::Grp));

TEST(Fv, BoundaryInflowAccountsForTotalsChange) {
  const ProblemSpec p = load_problem("shyue");
  Field1D f = make_field_1d(p, 100);
  SchemeOptions opt;
  for (int k = 0; k < 40; ++k) {
    const ConservedState before = totals(f);
    const StepReport rep = advance_1d(f, cfl_dt(f, 0.5), opt);
    const ConservedState change = minus(totals(f), before);
    EXPECT_LE(rel_diff(change, rep.inflow, before), 1e-13) << k;
  }
}

TEST(Fv, ZeroSlopeGrpReproducesGodunov) {
  const ProblemSpec p = load_problem("shyue");
  RunOptions a;
  a.scheme.scheme = Scheme::Godunov;
  RunOptions b;
  b.scheme.scheme = Scheme::Grp;
  b.scheme.zero_slopes = true;
  const Trajectory ta = run_simulation(p, a);
  const Trajectory tb = run_simulation(p, b);
  ASSERT_EQ(ta.steps, tb.steps);
  EXPECT_EQ(ta.snapshots_1d.back().cells, tb.snapshots_1d.back().cells);
}

TEST(Fv, RunsAreDeterministic) {
  const ProblemSpec p = load_problem("lee");
  RunOptions o;
  o.cells_x = 60;
  const Trajectory a = run_simulation(p, o);
  const Trajectory b = run_simulation(p, o);
  EXPECT_EQ(a.snapshots_1d.back().cells, b.snapshots_1d.back().cells);
  EXPECT_EQ(a.snapshots_1d.back().t, p.t_final);
}

TEST(Fv, SnapshotsLandOnOutputTimes) {
  const ProblemSpec p = load_problem("shyue");
  RunOptions o;
  o.output_times = {3.0, 7.5};
  const Trajectory t = run_simulation(p, o);
  ASSERT_EQ(t.snapshots_1d.size(), 3u);
  EXPECT_EQ(t.snapshots_1d[0].t, 3.0);
  EXPECT_EQ(t.snapshots_1d[1].t, 7.5);
  EXPECT_EQ(t.snapshots_1d[2].t, p.t_final);
}

TEST(Fv, ObserverSeesEveryStep) {
  const ProblemSpec p = load_problem("shyue");
  RunOptions o;
  std::size_t calls = 0;
  double elapsed = 0.0;
  o.observer_1d = [&](const Field1D&, double dt, const StepReport&) {
    ++calls;
    elapsed += dt;
  };
  const Trajectory t = run_simulation(p, o);
  EXPECT_EQ(calls, t.steps);
  EXPECT_NEAR(elapsed, p.t_final, 1e-12 * p.t_final);
}

TEST(Fv, FailedStepAbortsWithPartialTrajectory) {
  // Two streams leaving each other open a vacuum the solver must refuse.
  ProblemSpec p;
  p.name = "cavity";
  p.eos = EosModel::polytropic(1.4);
  Region right;
  right.state = {1.0, 20.0, 0.0, 0.1};
  Region left;
  left.x_hi = 0.5;
  left.state = {1.0, -20.0, 0.0, 0.1};
  p.regions = {right, left};
  p.t_final = 0.1;
  RunOptions o;
  o.cells_x = 20;
  try {
    run_simulation(p, o);
    FAIL() << "expected SimulationAborted";
  } catch (const SimulationAborted& e) {
    ASSERT_FALSE(e.partial().snapshots_1d.empty());
    EXPECT_EQ(e.partial().snapshots_1d.back().cells.size(), 20u);
  }
}

TEST(Fv, OptionValidation) {
  Field1D f = periodic_wave(16, EosModel::polytropic(1.4));
  SchemeOptions o;
  o.backend = RiemannBackend::ExactEos;
  EXPECT_THROW(advance_1d(f, 1e-3, o), DomainError);
  o = SchemeOptions{};
  o.limiter = 2.0;
  EXPECT_THROW(advance_1d(f, 1e-3, o), DomainError);
  o = SchemeOptions{};
  EXPECT_THROW(advance_1d(f, -1.0, o), DomainError);
}

TEST(Fv, ExactBackendTracksApproximateOnStiffenedGas) {
  // With a stiffened EOS the approximation is exact, so both backends solve
  // the same Riemann problems.
  ProblemSpec p;
  p.name = "stiff";
  p.eos = EosModel::stiffened(4.4, 0.5);
  Region r;
  r.state = {1.0, 0.0, 0.0, 1.0};
  Region l;
  l.x_hi = 0.5;
  l.state = {2.0, 0.0, 0.0, 5.0};
  p.regions = {r, l};
  p.t_final = 0.05;
  RunOptions a;
  a.cells_x = 50;
  a.scheme.scheme = Scheme::Godunov;
  RunOptions b = a;
  b.scheme.backend = RiemannBackend::ExactEos;
  const Field1D fa = run_simulation(p, a).snapshots_1d.back();
  const Field1D fb = run_simulation(p, b).snapshots_1d.back();
  for (std::size_t i = 0; i < fa.cells.size(); ++i)
    EXPECT_NEAR(fa.cells[i].rho, fb.cells[i].rho, 1e-7);
}

TEST(Fv, TwoDimensionalSplitReducesToOneDimension) {
  // Data independent of y: the y sweeps are inert and YXY is one full x step.
  ProblemSpec p = load_problem("shyue");
  p.dims = 2;
  p.y_lo = 0.0;
  p.y_hi = 8.0;
  Field2D f = make_field_2d(p, 100, 8);
  Field1D g = make_field_1d(p, 100);
  SchemeOptions o;
  o.sweep = SweepOrder::YXY;
  for (int k = 0; k < 10; ++k) {
    const double dt = cfl_dt(g, 0.5);
    advance_2d(f, dt, o);
    advance_1d(g, dt, o);
  }
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 100; ++i) {
      EXPECT_EQ(f.cells[f.index(i, j)].rho, g.cells[i].rho);
      EXPECT_EQ(f.cells[f.index(i, j)].rho_v, 0.0);
    }
}

}  // namespace
}  // namespace realgas
