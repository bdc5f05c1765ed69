#include "realgas/fv_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "realgas/exact_ref.hpp"

namespace realgas {

namespace {

ConservedState scaled(const ConservedState& q, double a) {
  return {q.rho * a, q.rho_u * a, q.rho_v * a, q.rho_E * a};
}

ConservedState swap_momentum(const ConservedState& q) { return {q.rho, q.rho_v, q.rho_u, q.rho_E}; }

bool finite(const PrimitiveState& w) {
  return std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.p);
}

bool stiffened_ok(const PrimitiveState& w, const StiffenedParams& gas) {
  return finite(w) && w.rho > 0.0 && w.p + gas.p_inf > 0.0;
}

// EOS data of a reconstructed interface value, evaluated once per trace.
struct Trace {
  KappaChi k;
  StiffenedParams gas;
  bool has_gas = false;
  bool ok = false;
};

// Admissible under the exact EOS and with a real approximated sound speed.
// `same_rho` is a trace at the same density whose EOS data is reused.
Trace make_trace(const EosModel& eos, double rho, double p, const Trace* same_rho = nullptr) {
  Trace t;
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) return t;
  try {
    if (same_rho && same_rho->has_gas) {
      t.k = same_rho->k;
      t.gas = same_rho->gas;
    } else {
      t.k = kappa_chi(eos, rho);
      if (!(t.k.kappa > 0.0)) return t;
      t.gas = local_stiffened_approx(eos, t.k, rho);
    }
    t.has_gas = true;
    (void)sound_speed_squared(eos, t.k, rho, p);
    t.ok = p + t.gas.p_inf > 0.0;
  } catch (const Error&) {
  }
  return t;
}

ConservedState flux_at(const PrimitiveState& w, double v, const StiffenedParams& gas) {
  return euler_flux({w.rho, w.u, v, w.p}, gas.internal_energy(w.rho, w.p));
}

}  // namespace

ConservedState interface_flux_godunov(const SideState& left, const SideState& right,
                                      double v_left, double v_right) {
  const RiemannFan fan = solve_star(left, right);
  const FanSample s = sample(fan, 0.0);
  const bool from_left = s.material == Material::Left;
  return flux_at(s.state, from_left ? v_left : v_right, from_left ? left.gas : right.gas);
}

ConservedState interface_flux_exact(const EosModel& eos, const FlowState& left,
                                    const FlowState& right) {
  ExactOptions opt;
  opt.fan_points = 8;
  const ExactSolution sol =
      solve_exact({left.rho, left.u, left.p}, {right.rho, right.u, right.p}, eos, opt);
  const FanSample s = sol.sample(0.0);
  const double v = s.material == Material::Left ? left.v : right.v;
  return euler_flux({s.state.rho, s.state.u, v, s.state.p},
                    internal_energy(eos, s.state.rho, s.state.p));
}

ConservedState interface_flux_grp(const GrpSideData& left, const GrpSideData& right,
                                  double v_left, double v_right, double dt,
                                  PrimitiveState* value_at_dt) {
  const InterfaceResolution res = solve_grp(left, right);
  const bool from_left = res.material == Material::Left;
  const StiffenedParams& gas = from_left ? left.state.gas : right.state.gas;
  const PrimitiveState& w = res.state;
  PrimitiveState mid{w.rho + 0.5 * dt * res.rho_t, w.u + 0.5 * dt * res.u_t,
                     w.p + 0.5 * dt * res.p_t};
  if (!stiffened_ok(mid, gas)) mid = w;
  if (value_at_dt) {
    PrimitiveState end{w.rho + dt * res.rho_t, w.u + dt * res.u_t, w.p + dt * res.p_t};
    *value_at_dt = finite(end) && end.rho > 0.0 ? end : w;
  }
  return flux_at(mid, from_left ? v_left : v_right, gas);
}

namespace {

// One directional update of a line of cells. rho_u is the normal momentum.
// `slopes` holds the stored normal slopes of the line (GRP); an empty vector
// asks for fresh central slopes. Returns dt * (F_lo - F_hi).
struct Line {
  std::vector<ConservedState>& q;
  std::vector<Slope>* slopes;
  BoundaryKind lo;
  BoundaryKind hi;
  double h;
  std::size_t base;    // global index of cell 0
  std::size_t stride;  // global index step along the line
};

class LineKernel {
public:
  LineKernel(const EosModel& eos, const SchemeOptions& opt) : eos_(eos), opt_(opt) {}

  ConservedState sweep(Line line, double dt);

private:
  std::size_t id(const Line& line, std::size_t i) const { return line.base + i * line.stride; }
  void ghost_values(const Line& line, const std::vector<FlowState>& wi);
  void limit(const Line& line, std::size_t n, const std::vector<Slope>& stored);

  const EosModel& eos_;
  const SchemeOptions& opt_;
  std::vector<FlowState> wi_;
  std::vector<FlowState> w_;  // extended, cell i at i + 2
  std::vector<Slope> s_;
  std::vector<double> sv_;
  std::vector<Slope> si_;
  std::vector<Trace> lo_;  // trace at the low face of each extended cell
  std::vector<Trace> hi_;
  std::vector<ConservedState> flux_;
  std::vector<PrimitiveState> value_;
};

void LineKernel::ghost_values(const Line& line, const std::vector<FlowState>& wi) {
  const std::size_t n = wi.size();
  const Ghosts g = apply_bc(wi, {}, line.lo, line.hi);
  w_.resize(n + 4);
  std::copy(wi.begin(), wi.end(), w_.begin() + 2);
  w_[1] = g.lo[0];
  w_[0] = g.lo[1];
  w_[n + 2] = g.hi[0];
  w_[n + 3] = g.hi[1];
}

// Limited slopes of every extended cell from the current w_. Stored slopes
// take the place of the central difference when present.
void LineKernel::limit(const Line& line, std::size_t n, const std::vector<Slope>& stored) {
  const double a = opt_.limiter;
  const double inv = 1.0 / line.h;
  s_.assign(n + 4, Slope{});
  sv_.assign(n + 4, 0.0);
  si_.resize(n);
  auto lim = [&](double wm, double w0, double wp, double mid) {
    return minmod(a * (w0 - wm) * inv, mid, a * (wp - w0) * inv);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const FlowState& wm = w_[i + 1];
    const FlowState& w0 = w_[i + 2];
    const FlowState& wp = w_[i + 3];
    const bool have = !stored.empty();
    Slope s;
    s.rho = lim(wm.rho, w0.rho, wp.rho, have ? stored[i].rho : 0.5 * (wp.rho - wm.rho) * inv);
    s.u = lim(wm.u, w0.u, wp.u, have ? stored[i].u : 0.5 * (wp.u - wm.u) * inv);
    s.p = lim(wm.p, w0.p, wp.p, have ? stored[i].p : 0.5 * (wp.p - wm.p) * inv);
    si_[i] = s;
    s_[i + 2] = s;
    sv_[i + 2] = lim(wm.v, w0.v, wp.v, 0.5 * (wp.v - wm.v) * inv);
  }
  const Ghosts g = apply_bc(wi_, si_, line.lo, line.hi);
  s_[1] = g.lo_slope[0];
  s_[0] = g.lo_slope[1];
  s_[n + 2] = g.hi_slope[0];
  s_[n + 3] = g.hi_slope[1];
  auto ghost_v = [&](BoundaryKind kind, std::size_t inner, std::size_t wrap) {
    switch (kind) {
      case BoundaryKind::Transmissive: return 0.0;
      case BoundaryKind::Reflective: return -sv_[inner];
      case BoundaryKind::Periodic: return sv_[wrap];
    }
    return 0.0;
  };
  sv_[1] = ghost_v(line.lo, 2, n + 1);
  sv_[n + 2] = ghost_v(line.hi, n + 1, 2);
}

ConservedState LineKernel::sweep(Line line, double dt) {
  const std::size_t n = line.q.size();
  const bool grp = opt_.scheme == Scheme::Grp;
  const bool sloped = grp && !opt_.zero_slopes;
  const double half = 0.5 * line.h;

  wi_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      wi_[i] = to_primitive(eos_, line.q[i]);
    } catch (const Error& e) {
      throw StepFailure(e.what(), id(line, i));
    }
  }
  ghost_values(line, wi_);

  lo_.resize(n + 4);
  hi_.resize(n + 4);
  if (sloped) {
    static const std::vector<Slope> none;
    const std::vector<Slope>& stored =
        line.slopes && line.slopes->size() == n ? *line.slopes : none;
    limit(line, n, stored);
    for (std::size_t k = 1; k <= n + 2; ++k) {
      const FlowState& w = w_[k];
      const Slope& s = s_[k];
      const Trace* flat = s.rho == 0.0 ? &lo_[k] : nullptr;
      lo_[k] = make_trace(eos_, w.rho - s.rho * half, w.p - s.p * half);
      hi_[k] = make_trace(eos_, w.rho + s.rho * half, w.p + s.p * half, flat);
      if (!lo_[k].ok || !hi_[k].ok) {
        const Trace centre = make_trace(eos_, w.rho, w.p, flat);
        s_[k] = Slope{};
        sv_[k] = 0.0;
        lo_[k] = hi_[k] = centre;
      }
    }
  } else {
    s_.assign(n + 4, Slope{});
    sv_.assign(n + 4, 0.0);
    for (std::size_t k = 1; k <= n + 2; ++k) lo_[k] = hi_[k] = make_trace(eos_, w_[k].rho, w_[k].p);
  }

  flux_.resize(n + 1);
  value_.resize(n + 1);
  for (std::size_t f = 0; f <= n; ++f) {
    const std::size_t kl = f + 1;
    const std::size_t kr = f + 2;
    const FlowState& a = w_[kl];
    const FlowState& b = w_[kr];
    const Slope& sa = s_[kl];
    const Slope& sb = s_[kr];
    const FlowState wl{a.rho + sa.rho * half, a.u + sa.u * half, a.v + sv_[kl] * half,
                       a.p + sa.p * half};
    const FlowState wr{b.rho - sb.rho * half, b.u - sb.u * half, b.v - sv_[kr] * half,
                       b.p - sb.p * half};
    const Trace& tl = hi_[kl];
    const Trace& tr = lo_[kr];
    try {
      if (opt_.backend == RiemannBackend::ExactEos) {
        flux_[f] = interface_flux_exact(eos_, wl, wr);
        continue;
      }
      // A failed trace is re-evaluated here so the EOS reports its own error.
      const SideState l = SideState::make(
          wl.rho, wl.u, wl.p, tl.ok ? tl.gas : local_stiffened_approx(eos_, wl.rho));
      const SideState r = SideState::make(
          wr.rho, wr.u, wr.p, tr.ok ? tr.gas : local_stiffened_approx(eos_, wr.rho));
      if (grp) {
        const GrpSideData gl = tl.ok ? make_grp_side(l, sa.rho, sa.u, sa.p, eos_, tl.k)
                                     : make_grp_side(l, sa.rho, sa.u, sa.p, eos_);
        const GrpSideData gr = tr.ok ? make_grp_side(r, sb.rho, sb.u, sb.p, eos_, tr.k)
                                     : make_grp_side(r, sb.rho, sb.u, sb.p, eos_);
        flux_[f] = interface_flux_grp(gl, gr, wl.v, wr.v, dt, &value_[f]);
      } else {
        flux_[f] = interface_flux_godunov(l, r, wl.v, wr.v);
      }
    } catch (const Error& e) {
      std::ostringstream os;
      os << "interface " << f << ": " << e.what();
      throw StepFailure(os.str(), id(line, std::min(f, n - 1)));
    }
  }

  const double lambda = dt / line.h;
  for (std::size_t i = 0; i < n; ++i) {
    ConservedState& q = line.q[i];
    const ConservedState& fl = flux_[i];
    const ConservedState& fr = flux_[i + 1];
    q.rho -= lambda * (fr.rho - fl.rho);
    q.rho_u -= lambda * (fr.rho_u - fl.rho_u);
    q.rho_v -= lambda * (fr.rho_v - fl.rho_v);
    q.rho_E -= lambda * (fr.rho_E - fl.rho_E);
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool ok = false;
    try {
      KappaChi k;
      wi_[i] = to_primitive(eos_, line.q[i], k);
      (void)sound_speed_squared(eos_, k, wi_[i].rho, wi_[i].p);
      ok = std::isfinite(wi_[i].p) && k.kappa > 0.0;
    } catch (const Error&) {
    }
    if (!ok) {
      std::ostringstream os;
      os << "inadmissible state after update (rho=" << line.q[i].rho << ")";
      throw StepFailure(os.str(), id(line, i));
    }
  }

  if (line.slopes) {
    if (sloped) {
      ghost_values(line, wi_);
      const double inv = 1.0 / line.h;
      std::vector<Slope> raw(n);
      for (std::size_t i = 0; i < n; ++i) {
        const PrimitiveState& vl = value_[i];
        const PrimitiveState& vr = value_[i + 1];
        raw[i] = {(vr.rho - vl.rho) * inv, (vr.u - vl.u) * inv, (vr.p - vl.p) * inv};
      }
      limit(line, n, raw);
      *line.slopes = si_;
    } else {
      line.slopes->clear();
    }
  }

  ConservedState inflow = flux_[0];
  inflow.rho -= flux_[n].rho;
  inflow.rho_u -= flux_[n].rho_u;
  inflow.rho_v -= flux_[n].rho_v;
  inflow.rho_E -= flux_[n].rho_E;
  return scaled(inflow, dt);
}

void check_options(const SchemeOptions& opt) {
  if (opt.backend == RiemannBackend::ExactEos && opt.scheme == Scheme::Grp)
    throw DomainError("the exact-EOS Riemann backend supports the Godunov scheme only");
  if (!(opt.limiter >= 1.0 && opt.limiter < 2.0))
    throw DomainError("limiter steepness must lie in [1, 2)");
  if (!(opt.cfl > 0.0 && opt.cfl <= 1.0)) throw DomainError("CFL must lie in (0, 1]");
}

void sweep_x(Field2D& field, double dt, LineKernel& kernel, ConservedState& inflow) {
  const auto nx = static_cast<std::size_t>(field.nx);
  if (field.slopes_x.size() != field.cells.size()) field.slopes_x.clear();
  std::vector<ConservedState> row(nx);
  std::vector<Slope> slopes;
  for (int j = 0; j < field.ny; ++j) {
    const std::size_t base = field.index(0, j);
    std::copy_n(field.cells.begin() + static_cast<std::ptrdiff_t>(base), nx, row.begin());
    slopes.clear();
    if (!field.slopes_x.empty())
      slopes.assign(field.slopes_x.begin() + static_cast<std::ptrdiff_t>(base),
                    field.slopes_x.begin() + static_cast<std::ptrdiff_t>(base + nx));
    inflow += scaled(kernel.sweep({row, &slopes, field.bc[0], field.bc[1],
                                   field.dx, base, 1},
                                  dt),
                     field.dy);
    std::copy(row.begin(), row.end(), field.cells.begin() + static_cast<std::ptrdiff_t>(base));
    if (slopes.size() == nx) {
      field.slopes_x.resize(field.cells.size());
      std::copy(slopes.begin(), slopes.end(),
                field.slopes_x.begin() + static_cast<std::ptrdiff_t>(base));
    }
  }
}

void sweep_y(Field2D& field, double dt, LineKernel& kernel, ConservedState& inflow) {
  const auto ny = static_cast<std::size_t>(field.ny);
  const auto nx = static_cast<std::size_t>(field.nx);
  if (field.slopes_y.size() != field.cells.size()) field.slopes_y.clear();
  std::vector<ConservedState> col(ny);
  std::vector<Slope> slopes;
  for (int i = 0; i < field.nx; ++i) {
    for (int j = 0; j < field.ny; ++j)
      col[static_cast<std::size_t>(j)] = swap_momentum(field.cells[field.index(i, j)]);
    slopes.clear();
    if (!field.slopes_y.empty())
      for (int j = 0; j < field.ny; ++j) slopes.push_back(field.slopes_y[field.index(i, j)]);
    const ConservedState in = kernel.sweep(
        {col, &slopes, field.bc[2], field.bc[3], field.dy, field.index(i, 0), nx}, dt);
    inflow += scaled(swap_momentum(in), field.dx);
    for (int j = 0; j < field.ny; ++j)
      field.cells[field.index(i, j)] = swap_momentum(col[static_cast<std::size_t>(j)]);
    if (slopes.size() == ny) {
      field.slopes_y.resize(field.cells.size());
      for (int j = 0; j < field.ny; ++j)
        field.slopes_y[field.index(i, j)] = slopes[static_cast<std::size_t>(j)];
    }
  }
}

}  // namespace

StepReport advance_1d(Field1D& field, double dt, const SchemeOptions& options) {
  check_options(options);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("advance_1d: dt must be positive");
  LineKernel kernel(field.eos, options);
  StepReport report;
  report.inflow =
      kernel.sweep({field.cells, &field.slopes, field.bc_lo, field.bc_hi, field.dx, 0, 1}, dt);
  field.t += dt;
  return report;
}

StepReport advance_2d(Field2D& field, double dt, const SchemeOptions& options) {
  check_options(options);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("advance_2d: dt must be positive");
  LineKernel kernel(field.eos, options);
  StepReport report;
  if (options.sweep == SweepOrder::XYX) {
    sweep_x(field, 0.5 * dt, kernel, report.inflow);
    sweep_y(field, dt, kernel, report.inflow);
    sweep_x(field, 0.5 * dt, kernel, report.inflow);
  } else {
    sweep_y(field, 0.5 * dt, kernel, report.inflow);
    sweep_x(field, dt, kernel, report.inflow);
    sweep_y(field, 0.5 * dt, kernel, report.inflow);
  }
  field.t += dt;
  return report;
}

namespace {

std::vector<double> schedule(const ProblemSpec& problem, const RunOptions& options,
                             double t_final) {
  std::vector<double> times =
      options.output_times.empty() ? problem.output_times : options.output_times;
  std::erase_if(times, [&](double t) { return !(t > 0.0) || t > t_final; });
  times.push_back(t_final);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

template <class Field, class Advance, class Observer, class Store>
void march(Field& field, const std::vector<double>& times, const RunOptions& options,
           Advance advance, const Observer& observer, Store store, Trajectory& out) {
  std::size_t next = 0;
  while (next < times.size()) {
    if (out.steps >= options.max_steps) {
      throw SimulationAborted("step limit reached", 0, out);
    }
    const double target = times[next];
    double dt = 0.0;
    StepReport report;
    try {
      dt = cfl_dt(field, options.scheme.cfl);
      const bool hit = field.t + dt * (1.0 + 1e-12) >= target;
      if (hit) dt = target - field.t;
      Field trial = field;
      report = advance(trial, dt);
      if (hit) trial.t = target;
      field = std::move(trial);
    } catch (const StepFailure& e) {
      Trajectory partial = out;
      store(partial, field);
      std::ostringstream os;
      os << "step " << out.steps + 1 << " at t=" << field.t << " failed: " << e.what();
      throw SimulationAborted(os.str(), e.cell(), std::move(partial));
    } catch (const InvalidStateError& e) {
      Trajectory partial = out;
      store(partial, field);
      std::ostringstream os;
      os << "step " << out.steps + 1 << " at t=" << field.t << " failed: " << e.what();
      throw SimulationAborted(os.str(), 0, std::move(partial));
    }
    ++out.steps;
    out.inflow += report.inflow;
    if (observer) observer(field, dt, report);
    while (next < times.size() && field.t >= times[next]) {
      store(out, field);
      ++next;
    }
  }
}

}  // namespace

Trajectory run_simulation(const ProblemSpec& problem, const RunOptions& options) {
  check_options(options.scheme);
  validate_problem(problem);
  const double t_final = options.t_final > 0.0 ? options.t_final : problem.t_final;
  const std::vector<double> times = schedule(problem, options, t_final);
  const bool sloped = options.scheme.scheme == Scheme::Grp && !options.scheme.zero_slopes;
  Trajectory out;
  if (problem.dims == 1) {
    Field1D field =
        make_field_1d(problem, options.cells_x > 0 ? options.cells_x : problem.cells_x);
    if (sloped) field.slopes = reconstruct(field, options.scheme.limiter);
    march(
        field, times, options,
        [&](Field1D& f, double dt) { return advance_1d(f, dt, options.scheme); },
        options.observer_1d,
        [](Trajectory& t, const Field1D& f) { t.snapshots_1d.push_back(f); }, out);
  } else {
    Field2D field =
        make_field_2d(problem, options.cells_x > 0 ? options.cells_x : problem.cells_x,
                      options.cells_y > 0 ? options.cells_y : problem.cells_y);
    march(
        field, times, options,
        [&](Field2D& f, double dt) { return advance_2d(f, dt, options.scheme); },
        options.observer_2d,
        [](Trajectory& t, const Field2D& f) { t.snapshots_2d.push_back(f); }, out);
  }
  return out;
}

}  // namespace realgas
