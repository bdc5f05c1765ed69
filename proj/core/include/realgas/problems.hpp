#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "realgas/eos.hpp"
#include "realgas/state.hpp"

namespace realgas {

enum class BoundaryKind { Transmissive, Reflective, Periodic };

/// Geometric region painted with a constant state. Regions are applied in
/// order, so later regions overwrite earlier ones; the first region should
/// cover the whole domain. Cells are classified by their centres.
struct Region {
  enum class Shape { Box, Circle };
  Shape shape = Shape::Box;
  double x_lo = -1e300, x_hi = 1e300;  // box extents
  double y_lo = -1e300, y_hi = 1e300;
  double cx = 0.0, cy = 0.0, radius = 0.0;  // circle
  FlowState state;

  bool contains(double x, double y) const;
};

/// Reference scales of a nondimensional problem.
struct UnitScaling {
  double pressure = 1.0;  // Mbar
  double density = 1.0;   // g/cm^3
  double length = 1.0;    // cm
  double time = 1.0;      // us

  double velocity() const { return length / time; }
};

enum class Quantity { Pressure, Density, Length, Time, Velocity, Energy };

double nondimensionalize(double value, Quantity q, const UnitScaling& s);
double redimensionalize(double value, Quantity q, const UnitScaling& s);
FlowState nondimensionalize(const FlowState& w, const UnitScaling& s);
FlowState redimensionalize(const FlowState& w, const UnitScaling& s);

/// Faces: x_lo, x_hi, y_lo, y_hi.
using BoundarySet = std::array<BoundaryKind, 4>;

struct ProblemSpec {
  std::string name;
  int dims = 1;
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  int cells_x = 100;
  int cells_y = 1;
  EosModel eos = EosModel::polytropic(1.4);
  std::vector<Region> regions;
  double t_final = 1.0;
  std::vector<double> output_times;  // snapshot times; t_final is always included
  BoundarySet bc{BoundaryKind::Transmissive, BoundaryKind::Transmissive,
                 BoundaryKind::Transmissive, BoundaryKind::Transmissive};
  double cfl = 0.5;
  // Present when the paper states the problem in nondimensional variables.
  // Geometry, states and times above are always stored in dimensional units.
  std::optional<UnitScaling> scaling;
  // 1D shock tubes: initial interface position (informational).
  std::optional<double> interface_x;

  /// State painted at (x, y).
  FlowState initial_state(double x, double y = 0.0) const;

  /// Left and right states of a 1D Riemann problem (first and last region).
  FlowState left_state() const;
  FlowState right_state() const;
};

std::vector<std::string> problem_names();

/// One of: contact, shyue, lee, rp2d, shock-bubble. Throws RegistryError.
ProblemSpec load_problem(const std::string& name);

/// Throws DomainError naming the first region whose state fails EOS validity.
void validate_problem(const ProblemSpec& p);

}  // namespace realgas
