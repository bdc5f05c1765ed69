#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "realgas/config.hpp"
#include "realgas/error.hpp"
#include "realgas/exact_ref.hpp"
#include "realgas/fv_scheme.hpp"
#include "realgas/grp.hpp"
#include "realgas/problems.hpp"
#include "realgas/riemann_stiffened.hpp"
#include "realgas/writers.hpp"

namespace realgas {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

std::string output_dir(const std::string& configured) {
  const char* env = std::getenv("REALGAS_OUT");
  const std::string dir = env && *env ? env : configured;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return dir;
}

json to_json(const PrimitiveState& w) { return {{"rho", w.rho}, {"u", w.u}, {"p", w.p}}; }

const char* wave_name(const Wave& w) { return w.is_shock() ? "shock" : "rarefaction"; }

const char* case_name(GrpCase c) {
  switch (c) {
    case GrpCase::Upwind: return "upwind";
    case GrpCase::Star: return "star";
    case GrpCase::Acoustic: return "acoustic";
    case GrpCase::Sonic: return "sonic";
  }
  return "star";
}

json fan_json(const RiemannFan& f) {
  return {{"p_star", f.p_star},
          {"u_star", f.u_star},
          {"rho_star_l", f.rho_star_l},
          {"rho_star_r", f.rho_star_r},
          {"c_star_l", f.c_star_l},
          {"c_star_r", f.c_star_r},
          {"left_wave", {{"kind", wave_name(f.left_wave)}, {"head", f.left_wave.head},
                         {"tail", f.left_wave.tail}}},
          {"right_wave", {{"kind", wave_name(f.right_wave)}, {"head", f.right_wave.head},
                          {"tail", f.right_wave.tail}}},
          {"trivial", f.trivial},
          {"iterations", f.iterations}};
}

// Non-finite doubles (the sonic case leaves Du, Dp undefined) print as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct GasArgs {
  double gamma = 1.4;
  double p_inf = 0.0;
  std::optional<double> gamma_right;
  std::optional<double> p_inf_right;

  void add(CLI::App* app) {
    app->add_option("--gamma", gamma, "Left (or common) adiabatic exponent")->capture_default_str();
    app->add_option("--p-inf", p_inf, "Left (or common) stiffening pressure")->capture_default_str();
    app->add_option("--gamma-right", gamma_right, "Right adiabatic exponent");
    app->add_option("--p-inf-right", p_inf_right, "Right stiffening pressure");
  }
  StiffenedParams left() const { return StiffenedParams::make(gamma, p_inf); }
  StiffenedParams right() const {
    return StiffenedParams::make(gamma_right.value_or(gamma), p_inf_right.value_or(p_inf));
  }
};

struct RunArgs {
  std::string config;
  std::string problem;
  std::string scheme;
  std::string backend;
  int cells = 0;
  int cells_y = 0;
  double cfl = 0.0;
  double limiter = 0.0;
  std::string out;
  std::vector<double> times;
  double t_final = 0.0;
};

int do_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (!a.config.empty()) c = load_config(a.config);
  if (!a.problem.empty()) {
    c.problem = a.problem;
    c.inline_problem.reset();
  }
  if (!a.scheme.empty()) {
    if (a.scheme != "grp" && a.scheme != "godunov")
      throw ConfigError("scheme: must be godunov or grp");
    c.scheme = a.scheme == "grp" ? Scheme::Grp : Scheme::Godunov;
  }
  if (!a.backend.empty()) {
    if (a.backend != "approximate" && a.backend != "exact-eos")
      throw ConfigError("backend: must be approximate or exact-eos");
    c.backend = a.backend == "exact-eos" ? RiemannBackend::ExactEos : RiemannBackend::Approximate;
  }
  if (a.cells) c.cells = a.cells;
  if (a.cells_y) c.cells_y = a.cells_y;
  if (a.cfl) c.cfl = a.cfl;
  if (a.limiter) c.limiter = a.limiter;
  if (!a.out.empty()) c.out_dir = a.out;
  if (!a.times.empty()) c.times = a.times;
  if (a.t_final) c.t_final = a.t_final;
  validate_config(c);

  const ProblemSpec problem = build_problem(c);
  const RunOptions options = build_run_options(c, problem);
  const std::string dir = output_dir(c.out_dir);
  const std::string stem = problem.name + "_" + std::string(to_string(c.scheme)) + "_" +
                           std::string(to_string(c.backend));

  auto emit = [&](const Trajectory& t, const std::string& suffix_for_last) {
    for (std::size_t k = 0; k < t.snapshots_1d.size(); ++k) {
      const Field1D& f = t.snapshots_1d[k];
      const bool last = !suffix_for_last.empty() && k + 1 == t.snapshots_1d.size();
      const std::string path =
          (fs::path(dir) / (stem + "_" + (last ? suffix_for_last : "t" + time_label(f.t)) + ".csv"))
              .string();
      write_csv_1d(f, path);
      out << path << "\n";
    }
    for (std::size_t k = 0; k < t.snapshots_2d.size(); ++k) {
      const Field2D& f = t.snapshots_2d[k];
      const bool last = !suffix_for_last.empty() && k + 1 == t.snapshots_2d.size();
      const std::string path =
          (fs::path(dir) / (stem + "_" + (last ? suffix_for_last : "t" + time_label(f.t)) + ".vtk"))
              .string();
      write_vtk_2d(f, path, problem.name + " t=" + time_label(f.t));
      out << path << "\n";
    }
  };

  try {
    const Trajectory t = run_simulation(problem, options);
    emit(t, "");
    err << problem.name << ": " << t.steps << " steps\n";
  } catch (const SimulationAborted& e) {
    emit(e.partial(), "failed");
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

struct RiemannArgs {
  std::vector<double> left, right;
  GasArgs gas;
  double t = 0.2;
  double x_lo = 0.0, x_hi = 1.0, x0 = 0.5;
  int points = 100;
  std::string csv;
};

int do_riemann(const RiemannArgs& a, std::ostream& out) {
  const SideState l = SideState::make(a.left[0], a.left[1], a.left[2], a.gas.left());
  const SideState r = SideState::make(a.right[0], a.right[1], a.right[2], a.gas.right());
  const RiemannFan fan = solve_star(l, r);
  out << fan_json(fan).dump(2) << "\n";
  if (!a.csv.empty()) {
    std::vector<ProfileRow> rows(static_cast<std::size_t>(a.points));
    const double dx = (a.x_hi - a.x_lo) / a.points;
    for (int i = 0; i < a.points; ++i) {
      const double x = a.x_lo + (i + 0.5) * dx;
      const FanSample s = sample(fan, (x - a.x0) / a.t);
      const StiffenedParams& g = s.material == Material::Left ? l.gas : r.gas;
      rows[static_cast<std::size_t>(i)] = {x, s.state.rho, s.state.u, s.state.p,
                                           g.internal_energy(s.state.rho, s.state.p)};
    }
    write_csv_1d(rows, a.csv);
  }
  return 0;
}

struct GrpArgs {
  std::vector<double> left, right;
  std::vector<double> left_slope{0.0, 0.0, 0.0}, right_slope{0.0, 0.0, 0.0};
  GasArgs gas;
};

int do_grp_check(const GrpArgs& a, std::ostream& out) {
  const SideState l = SideState::make(a.left[0], a.left[1], a.left[2], a.gas.left());
  const SideState r = SideState::make(a.right[0], a.right[1], a.right[2], a.gas.right());
  const GrpSideData gl = make_grp_side(l, a.left_slope[0], a.left_slope[1], a.left_slope[2]);
  const GrpSideData gr = make_grp_side(r, a.right_slope[0], a.right_slope[1], a.right_slope[2]);
  const InterfaceResolution res = solve_grp(gl, gr);
  json j{{"state", to_json(res.state)},
         {"material", res.material == Material::Left ? "left" : "right"},
         {"case", case_name(res.kind)},
         {"Du", number(res.Du)},
         {"Dp", number(res.Dp)},
         {"u_t", number(res.u_t)},
         {"p_t", number(res.p_t)},
         {"rho_t", number(res.rho_t)},
         {"theta", number(res.theta)},
         {"fan", fan_json(res.fan)}};
  out << j.dump(2) << "\n";
  return 0;
}

struct ExactArgs {
  std::string problem;
  std::string config;
  int points = 1000;
  double t = 0.0;
  std::string out;
};

int do_exact(const ExactArgs& a, std::ostream& out) {
  RunConfig c;
  if (!a.config.empty()) c = load_config(a.config);
  if (!a.problem.empty()) {
    c.problem = a.problem;
    c.inline_problem.reset();
  }
  validate_config(c);
  const ProblemSpec p = build_problem(c);
  if (p.dims != 1 || !p.interface_x)
    throw ConfigError("exact: '" + p.name + "' is not a 1D Riemann problem");
  const FlowState fl = p.left_state();
  const FlowState fr = p.right_state();
  const ExactSolution sol =
      solve_exact({fl.rho, fl.u, fl.p}, {fr.rho, fr.u, fr.p}, p.eos);
  const double t = a.t > 0.0 ? a.t : p.t_final;
  std::vector<ProfileRow> rows(static_cast<std::size_t>(a.points));
  const double dx = (p.x_hi - p.x_lo) / a.points;
  for (int i = 0; i < a.points; ++i) {
    const double x = p.x_lo + (i + 0.5) * dx;
    const FanSample s = sol.sample((x - *p.interface_x) / t);
    rows[static_cast<std::size_t>(i)] = {x, s.state.rho, s.state.u, s.state.p,
                                         internal_energy(p.eos, s.state.rho, s.state.p)};
  }
  const std::string dir = output_dir(a.out.empty() ? c.out_dir : a.out);
  const std::string path = (fs::path(dir) / (p.name + "_exact_t" + time_label(t) + ".csv")).string();
  write_csv_1d(rows, path);
  out << path << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler solver for real-material equations of state"};
  app.name("realgas");
  app.require_subcommand(1);

  auto* problems = app.add_subcommand("problems", "List the built-in problems");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a simulation and write snapshots");
  run_cmd->add_option("-c,--config", run.config, "Run configuration file")->check(CLI::ExistingFile);
  run_cmd->add_option("-p,--problem", run.problem, "Built-in problem name");
  run_cmd->add_option("--scheme", run.scheme, "godunov | grp");
  run_cmd->add_option("--backend", run.backend, "approximate | exact-eos");
  run_cmd->add_option("--cells", run.cells, "Cells in x");
  run_cmd->add_option("--cells-y", run.cells_y, "Cells in y (2D)");
  run_cmd->add_option("--cfl", run.cfl, "CFL number");
  run_cmd->add_option("--limiter", run.limiter, "Minmod steepness in [1, 2)");
  run_cmd->add_option("-o,--out", run.out, "Output directory");
  run_cmd->add_option("--times", run.times, "Snapshot times")->delimiter(',');
  run_cmd->add_option("--t-final", run.t_final, "Final time");

  RiemannArgs rm;
  auto* riemann_cmd = app.add_subcommand("riemann", "Stiffened-gas Riemann problem");
  riemann_cmd->add_option("--left", rm.left, "rho,u,p")->delimiter(',')->expected(3)->required();
  riemann_cmd->add_option("--right", rm.right, "rho,u,p")->delimiter(',')->expected(3)->required();
  rm.gas.add(riemann_cmd);
  riemann_cmd->add_option("--t", rm.t, "Sample time")->capture_default_str();
  riemann_cmd->add_option("--x-lo", rm.x_lo)->capture_default_str();
  riemann_cmd->add_option("--x-hi", rm.x_hi)->capture_default_str();
  riemann_cmd->add_option("--x0", rm.x0, "Initial discontinuity")->capture_default_str();
  riemann_cmd->add_option("--points", rm.points)->check(CLI::Range(1, 100000000))->capture_default_str();
  riemann_cmd->add_option("--csv", rm.csv, "Write the sampled profile here");

  GrpArgs gp;
  auto* grp_cmd = app.add_subcommand("grp-check", "Dump the GRP interface resolution");
  grp_cmd->add_option("--left", gp.left, "rho,u,p")->delimiter(',')->expected(3)->required();
  grp_cmd->add_option("--right", gp.right, "rho,u,p")->delimiter(',')->expected(3)->required();
  grp_cmd->add_option("--left-slope", gp.left_slope, "drho,du,dp")->delimiter(',')->expected(3);
  grp_cmd->add_option("--right-slope", gp.right_slope, "drho,du,dp")->delimiter(',')->expected(3);
  gp.gas.add(grp_cmd);

  ExactArgs ex;
  auto* exact_cmd = app.add_subcommand("exact", "Exact real-EOS reference profile");
  exact_cmd->add_option("-p,--problem", ex.problem, "Built-in 1D problem");
  exact_cmd->add_option("-c,--config", ex.config, "Configuration with an inline problem")
      ->check(CLI::ExistingFile);
  exact_cmd->add_option("--points", ex.points)->check(CLI::Range(1, 100000000))->capture_default_str();
  exact_cmd->add_option("--t", ex.t, "Sample time (default: problem final time)");
  exact_cmd->add_option("-o,--out", ex.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (run_cmd->parsed() && run.config.empty() && run.problem.empty()) {
    err << "run: give --config or --problem\n";
    return 1;
  }
  if (exact_cmd->parsed() && ex.config.empty() && ex.problem.empty()) {
    err << "exact: give --config or --problem\n";
    return 1;
  }

  try {
    if (problems->parsed()) {
      for (const std::string& name : problem_names()) out << name << "\n";
      return 0;
    }
    if (run_cmd->parsed()) return do_run(run, out, err);
    if (riemann_cmd->parsed()) return do_riemann(rm, out);
    if (grp_cmd->parsed()) return do_grp_check(gp, out);
    if (exact_cmd->parsed()) return do_exact(ex, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const RegistryError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace realgas
