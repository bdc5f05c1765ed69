#include <algorithm>
#include <cmath>
#include <sstream>

#include "realgas/error.hpp"
#include "realgas/fv_scheme.hpp"

namespace realgas {

ConservedState to_conserved(const EosModel& eos, const FlowState& w) {
  const double e = internal_energy(eos, w.rho, w.p);
  ConservedState q;
  q.rho = w.rho;
  q.rho_u = w.rho * w.u;
  q.rho_v = w.rho * w.v;
  q.rho_E = w.rho * (e + 0.5 * (w.u * w.u + w.v * w.v));
  return q;
}

FlowState to_primitive(const EosModel& eos, const ConservedState& q) {
  KappaChi k;
  return to_primitive(eos, q, k);
}

FlowState to_primitive(const EosModel& eos, const ConservedState& q, KappaChi& k) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho) || !std::isfinite(q.rho_u) ||
      !std::isfinite(q.rho_v) || !std::isfinite(q.rho_E)) {
    std::ostringstream os;
    os << "inadmissible conserved state rho=" << q.rho << " rho_E=" << q.rho_E;
    throw InvalidStateError(os.str());
  }
  FlowState w;
  w.rho = q.rho;
  w.u = q.rho_u / q.rho;
  w.v = q.rho_v / q.rho;
  const double e = q.rho_E / q.rho - 0.5 * (w.u * w.u + w.v * w.v);
  k = kappa_chi(eos, w.rho);
  w.p = k.kappa * e + k.chi;
  return w;
}

ConservedState euler_flux(const FlowState& w, double e) {
  const double mass = w.rho * w.u;
  const double big_e = e + 0.5 * (w.u * w.u + w.v * w.v);
  return {mass, mass * w.u + w.p, mass * w.v, w.u * (w.rho * big_e + w.p)};
}

Field1D make_field_1d(const ProblemSpec& problem, int cells) {
  if (cells < 1) throw DomainError("make_field_1d: need at least one cell");
  Field1D f;
  f.n = cells;
  f.x_lo = problem.x_lo;
  f.dx = (problem.x_hi - problem.x_lo) / cells;
  f.eos = problem.eos;
  f.bc_lo = problem.bc[0];
  f.bc_hi = problem.bc[1];
  const double y = 0.5 * (problem.y_lo + problem.y_hi);
  f.cells.resize(static_cast<std::size_t>(cells));
  for (int i = 0; i < cells; ++i)
    f.cells[static_cast<std::size_t>(i)] =
        to_conserved(f.eos, problem.initial_state(f.x_center(i), y));
  return f;
}

Field2D make_field_2d(const ProblemSpec& problem, int cells_x, int cells_y) {
  if (cells_x < 1 || cells_y < 1) throw DomainError("make_field_2d: need at least one cell");
  Field2D f;
  f.nx = cells_x;
  f.ny = cells_y;
  f.x_lo = problem.x_lo;
  f.y_lo = problem.y_lo;
  f.dx = (problem.x_hi - problem.x_lo) / cells_x;
  f.dy = (problem.y_hi - problem.y_lo) / cells_y;
  f.eos = problem.eos;
  f.bc = problem.bc;
  f.cells.resize(static_cast<std::size_t>(cells_x) * static_cast<std::size_t>(cells_y));
  for (int j = 0; j < cells_y; ++j)
    for (int i = 0; i < cells_x; ++i)
      f.cells[f.index(i, j)] =
          to_conserved(f.eos, problem.initial_state(f.x_center(i), f.y_center(j)));
  return f;
}

double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

namespace {

FlowState reflect(const FlowState& w) { return {w.rho, -w.u, w.v, w.p}; }
Slope reflect(const Slope& s) { return {-s.rho, s.u, -s.p}; }

}  // namespace

Ghosts apply_bc(const std::vector<FlowState>& w, const std::vector<Slope>& slopes,
                BoundaryKind lo, BoundaryKind hi) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("apply_bc: empty line");
  auto slope = [&](std::size_t i) { return slopes.empty() ? Slope{} : slopes[i]; };
  auto inner = [&](std::size_t k) { return std::min(k, n - 1); };
  Ghosts g;
  for (std::size_t k = 0; k < 2; ++k) {
    switch (lo) {
      case BoundaryKind::Transmissive:
        g.lo[k] = w[0];
        g.lo_slope[k] = Slope{};
        break;
      case BoundaryKind::Reflective:
        g.lo[k] = reflect(w[inner(k)]);
        g.lo_slope[k] = reflect(slope(inner(k)));
        break;
      case BoundaryKind::Periodic:
        g.lo[k] = w[(n - 1 - k % n + n) % n];
        g.lo_slope[k] = slope((n - 1 - k % n + n) % n);
        break;
    }
    switch (hi) {
      case BoundaryKind::Transmissive:
        g.hi[k] = w[n - 1];
        g.hi_slope[k] = Slope{};
        break;
      case BoundaryKind::Reflective:
        g.hi[k] = reflect(w[n - 1 - inner(k)]);
        g.hi_slope[k] = reflect(slope(n - 1 - inner(k)));
        break;
      case BoundaryKind::Periodic:
        g.hi[k] = w[k % n];
        g.hi_slope[k] = slope(k % n);
        break;
    }
  }
  return g;
}

std::vector<Slope> reconstruct(const Field1D& field, double limiter) {
  std::vector<FlowState> w(field.cells.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = to_primitive(field.eos, field.cells[i]);
  const Ghosts g = apply_bc(w, {}, field.bc_lo, field.bc_hi);
  const std::size_t n = w.size();
  auto at = [&](std::ptrdiff_t i) -> const FlowState& {
    if (i < 0) return g.lo[static_cast<std::size_t>(-i - 1)];
    if (i >= static_cast<std::ptrdiff_t>(n)) return g.hi[static_cast<std::size_t>(i) - n];
    return w[static_cast<std::size_t>(i)];
  };
  std::vector<Slope> s(n);
  const double a = limiter;
  const double inv = 1.0 / field.dx;
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const FlowState& wm = at(k - 1);
    const FlowState& w0 = at(k);
    const FlowState& wp = at(k + 1);
    s[i].rho = minmod(a * (w0.rho - wm.rho), 0.5 * (wp.rho - wm.rho), a * (wp.rho - w0.rho)) * inv;
    s[i].u = minmod(a * (w0.u - wm.u), 0.5 * (wp.u - wm.u), a * (wp.u - w0.u)) * inv;
    s[i].p = minmod(a * (w0.p - wm.p), 0.5 * (wp.p - wm.p), a * (wp.p - w0.p)) * inv;
  }
  return s;
}

double cfl_dt(const Field1D& field, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl_dt: CFL must lie in (0, 1]");
  double smax = 0.0;
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    KappaChi k;
    const FlowState w = to_primitive(field.eos, field.cells[i], k);
    const double s = std::abs(w.u) + std::sqrt(sound_speed_squared(field.eos, k, w.rho, w.p));
    if (!std::isfinite(s)) throw InvalidStateError("cfl_dt: non-finite wave speed");
    smax = std::max(smax, s);
  }
  if (!(smax > 0.0)) throw InvalidStateError("cfl_dt: zero wave speed");
  return cfl * field.dx / smax;
}

double cfl_dt(const Field2D& field, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl_dt: CFL must lie in (0, 1]");
  double sx = 0.0, sy = 0.0;
  for (const ConservedState& q : field.cells) {
    KappaChi k;
    const FlowState w = to_primitive(field.eos, q, k);
    const double c = std::sqrt(sound_speed_squared(field.eos, k, w.rho, w.p));
    const double ax = std::abs(w.u) + c;
    const double ay = std::abs(w.v) + c;
    if (!std::isfinite(ax) || !std::isfinite(ay))
      throw InvalidStateError("cfl_dt: non-finite wave speed");
    sx = std::max(sx, ax);
    sy = std::max(sy, ay);
  }
  if (!(sx > 0.0) || !(sy > 0.0)) throw InvalidStateError("cfl_dt: zero wave speed");
  return cfl * std::min(field.dx / sx, field.dy / sy);
}

ConservedState totals(const Field1D& field) {
  ConservedState t;
  for (const ConservedState& q : field.cells) t += q;
  return {t.rho * field.dx, t.rho_u * field.dx, t.rho_v * field.dx, t.rho_E * field.dx};
}

ConservedState totals(const Field2D& field) {
  ConservedState t;
  for (const ConservedState& q : field.cells) t += q;
  const double vol = field.dx * field.dy;
  return {t.rho * vol, t.rho_u * vol, t.rho_v * vol, t.rho_E * vol};
}

}  // namespace realgas
