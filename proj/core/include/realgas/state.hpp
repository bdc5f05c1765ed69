#pragma once

// Flow-state value types shared by every module.
//
// Units follow the CGS-Mbar-us system throughout: density g/cm^3, velocity
// cm/us, pressure Mbar, specific energy Mbar cm^3/g, length cm, time us.

namespace realgas {

/// (rho, u, p) for one-dimensional problems.
struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;

  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

/// (rho, rho u, rho v, rho E). In one dimension rho_v stays zero; E always
/// includes the transverse kinetic energy.
struct ConservedState {
  double rho = 0.0;
  double rho_u = 0.0;
  double rho_v = 0.0;
  double rho_E = 0.0;

  friend bool operator==(const ConservedState&, const ConservedState&) = default;

  ConservedState& operator+=(const ConservedState& o) {
    rho += o.rho;
    rho_u += o.rho_u;
    rho_v += o.rho_v;
    rho_E += o.rho_E;
    return *this;
  }
};

/// Primitive state including the transverse velocity component.
struct FlowState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;

  friend bool operator==(const FlowState&, const FlowState&) = default;
};

/// Which side of the material interface a sampled point belongs to.
enum class Material { Left, Right };

enum class Side { Left, Right };

}  // namespace realgas
