#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realgas/eos.hpp"
#include "realgas/fv_scheme.hpp"
#include "realgas/problems.hpp"
#include "realgas/state.hpp"

namespace realgas {

/// A 1D two-state tube given directly in the configuration file.
struct InlineProblem {
  std::string name = "inline";
  EosModel eos = EosModel::polytropic(1.4);
  double x_lo = 0.0;
  double x_hi = 1.0;
  double interface_x = 0.5;
  double t_final = 0.2;
  FlowState left;
  FlowState right;

  friend bool operator==(const InlineProblem&, const InlineProblem&) = default;
};

/// Run configuration. Keys of the file format:
///   problem = "shyue"            registry name (or an [problem] + [eos] block)
///   scheme = "grp"               godunov | grp
///   backend = "approximate"      approximate | exact-eos
///   cells = 100                  x resolution (>= 4)
///   cells_y = 0                  y resolution, 0 keeps the problem aspect ratio
///   cfl = 0.5                    in (0, 1]
///   limiter = 1.9                minmod steepness in [1, 2)
///   sweep = "xyx"                xyx | yxy
///   bc_x_lo, bc_x_hi, bc_y_lo, bc_y_hi = "transmissive" | "reflective" | "periodic"
///   out_dir = "out"
///   times = [40.0, 70.0]         snapshot times (t_final is always written)
///   t_final = 12.0               overrides the problem's final time
/// [problem] keys: name, x_lo, x_hi, interface, t_final, left, right
/// (left/right are [rho, u, p]). [eos] keys: kind (polytropic | stiffened |
/// jwl | cochran-chan), gamma, p_inf, rho0, e0, Gamma, A, B, R1, R2, eps1, eps2.
struct RunConfig {
  std::string problem;
  std::optional<InlineProblem> inline_problem;
  Scheme scheme = Scheme::Grp;
  RiemannBackend backend = RiemannBackend::Approximate;
  int cells = 100;
  int cells_y = 0;
  double cfl = 0.5;
  double limiter = 1.9;
  SweepOrder sweep = SweepOrder::XYX;
  std::array<std::optional<BoundaryKind>, 4> bc{};
  std::string out_dir = "out";
  std::vector<double> times;
  std::optional<double> t_final;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError with the offending line for syntax errors, unknown or
/// duplicate keys, and with the field name for failed validation.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

/// Throws ConfigError naming the first invalid field.
void validate_config(const RunConfig& config);

/// Problem definition with the configuration's overrides applied.
ProblemSpec build_problem(const RunConfig& config);
RunOptions build_run_options(const RunConfig& config, const ProblemSpec& problem);

std::string_view to_string(Scheme s);
std::string_view to_string(RiemannBackend b);
std::string_view to_string(BoundaryKind b);
std::string_view to_string(SweepOrder s);

}  // namespace realgas
