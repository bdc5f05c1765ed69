#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "realgas/eos.hpp"
#include "realgas/error.hpp"
#include "realgas/grp.hpp"
#include "realgas/problems.hpp"
#include "realgas/riemann_stiffened.hpp"
#include "realgas/state.hpp"

namespace realgas {

enum class Scheme { Godunov, Grp };
enum class RiemannBackend { Approximate, ExactEos };
enum class SweepOrder { XYX, YXY };

struct SchemeOptions {
  Scheme scheme = Scheme::Grp;
  RiemannBackend backend = RiemannBackend::Approximate;
  double limiter = 1.9;  // minmod steepness alpha in [1, 2)
  double cfl = 0.5;
  SweepOrder sweep = SweepOrder::XYX;
  bool zero_slopes = false;  // GRP with every slope forced to zero
};

/// Primitive slopes (per unit length) of one cell.
struct Slope {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;

  friend bool operator==(const Slope&, const Slope&) = default;
};

struct Field1D {
  int n = 0;
  double x_lo = 0.0;
  double dx = 1.0;
  EosModel eos = EosModel::polytropic(1.4);
  double t = 0.0;
  std::vector<ConservedState> cells;
  std::vector<Slope> slopes;  // GRP only; empty means zero
  BoundaryKind bc_lo = BoundaryKind::Transmissive;
  BoundaryKind bc_hi = BoundaryKind::Transmissive;

  double x_center(int i) const { return x_lo + (i + 0.5) * dx; }
};

struct Field2D {
  int nx = 0;
  int ny = 0;
  double x_lo = 0.0;
  double y_lo = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  EosModel eos = EosModel::polytropic(1.4);
  double t = 0.0;
  std::vector<ConservedState> cells;  // row-major, index j * nx + i
  std::vector<Slope> slopes_x;        // normal slopes for x sweeps (GRP)
  std::vector<Slope> slopes_y;        // normal slopes for y sweeps (GRP)
  BoundarySet bc{BoundaryKind::Transmissive, BoundaryKind::Transmissive,
                 BoundaryKind::Transmissive, BoundaryKind::Transmissive};

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) +
           static_cast<std::size_t>(i);
  }
  double x_center(int i) const { return x_lo + (i + 0.5) * dx; }
  double y_center(int j) const { return y_lo + (j + 0.5) * dy; }
};

ConservedState to_conserved(const EosModel& eos, const FlowState& w);
/// Exact-EOS inversion; throws InvalidStateError for rho <= 0 or non-finite data.
FlowState to_primitive(const EosModel& eos, const ConservedState& q);
/// As above, also returning kappa and chi at the cell density.
FlowState to_primitive(const EosModel& eos, const ConservedState& q, KappaChi& k);

/// Physical flux of the x-direction Euler system for a state whose specific
/// internal energy is e.
ConservedState euler_flux(const FlowState& w, double e);

Field1D make_field_1d(const ProblemSpec& problem, int cells);
Field2D make_field_2d(const ProblemSpec& problem, int cells_x, int cells_y);

double minmod(double a, double b, double c);

/// Limited primitive slopes of (rho, u, p) for every cell, using ghost cells
/// from the field's boundary conditions.
std::vector<Slope> reconstruct(const Field1D& field, double limiter = 1.9);

/// Two ghost layers on each side (outermost first on the low side).
struct Ghosts {
  std::array<FlowState, 2> lo;  // lo[0] is adjacent to cell 0
  std::array<FlowState, 2> hi;  // hi[0] is adjacent to cell n-1
  std::array<Slope, 2> lo_slope;
  std::array<Slope, 2> hi_slope;
};
Ghosts apply_bc(const std::vector<FlowState>& w, const std::vector<Slope>& slopes,
                BoundaryKind lo, BoundaryKind hi);

/// Interface fluxes, each returning the flux of (rho, rho u, rho v, rho E).
/// Transverse velocity v rides with the material selected at x/t = 0.
ConservedState interface_flux_godunov(const SideState& left, const SideState& right,
                                      double v_left, double v_right);
ConservedState interface_flux_exact(const EosModel& eos, const FlowState& left,
                                    const FlowState& right);
ConservedState interface_flux_grp(const GrpSideData& left, const GrpSideData& right,
                                  double v_left, double v_right, double dt,
                                  PrimitiveState* value_at_dt = nullptr);

double cfl_dt(const Field1D& field, double cfl);
double cfl_dt(const Field2D& field, double cfl);

/// Accumulated boundary flux: total change of the conserved integrals
/// equals this inflow (per unit transverse length in 1D).
struct StepReport {
  ConservedState inflow;
};

StepReport advance_1d(Field1D& field, double dt, const SchemeOptions& options);
StepReport advance_2d(Field2D& field, double dt, const SchemeOptions& options);

/// Sum of cell averages times cell volume.
ConservedState totals(const Field1D& field);
ConservedState totals(const Field2D& field);

struct Trajectory {
  std::vector<Field1D> snapshots_1d;
  std::vector<Field2D> snapshots_2d;
  std::size_t steps = 0;
  ConservedState inflow;  // accumulated over the run
};

/// Called after every accepted step (field state, time step, report).
using StepObserver1D = std::function<void(const Field1D&, double, const StepReport&)>;
using StepObserver2D = std::function<void(const Field2D&, double, const StepReport&)>;

struct RunOptions {
  SchemeOptions scheme;
  int cells_x = 0;  // 0 selects the problem default
  int cells_y = 0;
  std::vector<double> output_times;  // overrides the problem schedule if non-empty
  double t_final = 0.0;              // overrides the problem if > 0
  StepObserver1D observer_1d;
  StepObserver2D observer_2d;
  std::size_t max_steps = 10'000'000;
};

/// A step failed. partial holds the snapshots written so far followed by the
/// last accepted state as a diagnostic snapshot.
class SimulationAborted : public Error {
public:
  SimulationAborted(const std::string& what, std::size_t cell, Trajectory partial)
      : Error(what), cell_(cell), partial_(std::move(partial)) {}
  std::size_t cell() const noexcept { return cell_; }
  const Trajectory& partial() const noexcept { return partial_; }

private:
  std::size_t cell_;
  Trajectory partial_;
};

/// Advances the problem to its final time, clamping steps onto output times.
/// Throws SimulationAborted when a step fails.
Trajectory run_simulation(const ProblemSpec& problem, const RunOptions& options);

}  // namespace realgas
