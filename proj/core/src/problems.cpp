#include "realgas/problems.hpp"

#include <cmath>
#include <sstream>

#include "realgas/error.hpp"

namespace realgas {

bool Region::contains(double x, double y) const {
  if (shape == Shape::Box) return x >= x_lo && x < x_hi && y >= y_lo && y < y_hi;
  const double dx = x - cx;
  const double dy = y - cy;
  return dx * dx + dy * dy <= radius * radius;
}

namespace {

double scale_of(Quantity q, const UnitScaling& s) {
  switch (q) {
    case Quantity::Pressure: return s.pressure;
    case Quantity::Density: return s.density;
    case Quantity::Length: return s.length;
    case Quantity::Time: return s.time;
    case Quantity::Velocity: return s.velocity();
    case Quantity::Energy: return s.pressure / s.density;
  }
  return 1.0;
}

Region box(double x_lo, double x_hi, double y_lo, double y_hi, FlowState w) {
  Region r;
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  r.y_lo = y_lo;
  r.y_hi = y_hi;
  r.state = w;
  return r;
}

Region everywhere(FlowState w) {
  Region r;
  r.state = w;
  return r;
}

ProblemSpec shock_tube(std::string name, EosModel eos, double t_final, FlowState left,
                       FlowState right) {
  ProblemSpec p;
  p.name = std::move(name);
  p.dims = 1;
  p.x_lo = 0.0;
  p.x_hi = 100.0;
  p.y_lo = 0.0;
  p.y_hi = 1.0;
  p.cells_x = 100;
  p.cells_y = 1;
  p.eos = eos;
  p.interface_x = 50.0;
  p.regions = {everywhere(right), box(-1e300, 50.0, -1e300, 1e300, left)};
  p.t_final = t_final;
  return p;
}

JwlParams tnt() { return {1.84, 0.0, 0.25, 8.545, 0.205, 4.6, 1.35}; }

ProblemSpec contact() {
  const CochranChanParams cc{1.134, 0.0, 1.19, 8192.0, 1508.0, 4.53, 1.42};
  return shock_tube("contact", EosModel::cochran_chan(cc), 40.0, {1.134, 0.1, 0.0, 2e4},
                    {0.5, 0.1, 0.0, 2e4});
}

ProblemSpec shyue() {
  return shock_tube("shyue", EosModel::jwl(tnt()), 12.0, {1.7, 0.0, 0.0, 10.0},
                    {1.0, 0.0, 0.0, 0.5});
}

ProblemSpec lee() {
  const JwlParams lx17{1.905, 0.0, 0.8938, 632.1, -0.04472, 11.3, 1.13};
  return shock_tube("lee", EosModel::jwl(lx17), 20.0, {0.9525, 0.0, 0.0, 1.0},
                    {3.810, 0.0, 0.0, 2.0});
}

ProblemSpec rp2d() {
  UnitScaling s;
  s.pressure = 1.0;    // 100 GPa
  s.density = 1.895;   // rho0 of PBX-9502
  s.length = 10.0;     // 0.1 m
  s.time = 100.0;      // 1e-4 s
  // A and B are read as bar (1.362e6 bar = 1.362 Mbar); taken literally in
  // Mbar the approximated sound speed is imaginary in three of the regions.
  const JwlParams pbx{1.895, 0.0, 0.5, 1.362, 0.07199, 6.2, 2.2};

  auto dim = [&](double rho, double u, double v, double p) {
    return redimensionalize(FlowState{rho, u, v, p}, s);
  };
  const double xc = 0.75 * s.length;
  const double yc = 0.75 * s.length;
  ProblemSpec p;
  p.name = "rp2d";
  p.dims = 2;
  p.x_lo = 0.0;
  p.x_hi = s.length;
  p.y_lo = 0.0;
  p.y_hi = s.length;
  p.cells_x = 400;
  p.cells_y = 400;
  p.eos = EosModel::jwl(pbx);
  p.regions = {
      everywhere(dim(1.0, 0.0, 0.0, 1.0)),                      // I, upper right
      box(-1e300, xc, yc, 1e300, dim(0.5, 0.0, 1.0, 0.25)),     // II, upper left
      box(-1e300, xc, -1e300, yc, dim(0.125, 1.0, 1.0, 0.025)), // III, lower left
      box(xc, 1e300, -1e300, yc, dim(0.5, 1.0, 0.0, 0.25)),     // IV, lower right
  };
  p.t_final = 0.5 * s.time;
  p.scaling = s;
  return p;
}

ProblemSpec shock_bubble() {
  ProblemSpec p;
  p.name = "shock-bubble";
  p.dims = 2;
  p.x_lo = 0.0;
  p.x_hi = 300.0;
  p.y_lo = 0.0;
  p.y_hi = 100.0;
  p.cells_x = 1200;
  p.cells_y = 400;
  p.eos = EosModel::jwl(tnt());
  Region bubble;
  bubble.shape = Region::Shape::Circle;
  bubble.cx = 50.0;
  bubble.cy = 50.0;
  bubble.radius = 25.0;
  bubble.state = {2.0, 0.0, 0.0, 0.5};
  p.regions = {everywhere({1.0, 0.0, 0.0, 0.5}),
               box(-1e300, 5.0, -1e300, 1e300, {4.545, 1.737, 0.0, 4.369}), bubble};
  p.t_final = 70.0;
  p.output_times = {40.0, 70.0};
  p.bc = {BoundaryKind::Transmissive, BoundaryKind::Transmissive, BoundaryKind::Reflective,
          BoundaryKind::Reflective};
  return p;
}

}  // namespace

double nondimensionalize(double value, Quantity q, const UnitScaling& s) {
  return value / scale_of(q, s);
}

double redimensionalize(double value, Quantity q, const UnitScaling& s) {
  return value * scale_of(q, s);
}

FlowState nondimensionalize(const FlowState& w, const UnitScaling& s) {
  return {nondimensionalize(w.rho, Quantity::Density, s),
          nondimensionalize(w.u, Quantity::Velocity, s),
          nondimensionalize(w.v, Quantity::Velocity, s),
          nondimensionalize(w.p, Quantity::Pressure, s)};
}

FlowState redimensionalize(const FlowState& w, const UnitScaling& s) {
  return {redimensionalize(w.rho, Quantity::Density, s),
          redimensionalize(w.u, Quantity::Velocity, s),
          redimensionalize(w.v, Quantity::Velocity, s),
          redimensionalize(w.p, Quantity::Pressure, s)};
}

FlowState ProblemSpec::initial_state(double x, double y) const {
  FlowState w;
  bool any = false;
  for (const Region& r : regions) {
    if (r.contains(x, y)) {
      w = r.state;
      any = true;
    }
  }
  if (!any) throw DomainError("problem '" + name + "': point not covered by any region");
  return w;
}

FlowState ProblemSpec::left_state() const {
  if (regions.empty()) throw DomainError("problem has no regions");
  return regions.size() > 1 ? regions[1].state : regions[0].state;
}

FlowState ProblemSpec::right_state() const {
  if (regions.empty()) throw DomainError("problem has no regions");
  return regions[0].state;
}

std::vector<std::string> problem_names() {
  return {"contact", "shyue", "lee", "rp2d", "shock-bubble"};
}

ProblemSpec load_problem(const std::string& name) {
  if (name == "contact") return contact();
  if (name == "shyue") return shyue();
  if (name == "lee") return lee();
  if (name == "rp2d") return rp2d();
  if (name == "shock-bubble") return shock_bubble();
  throw RegistryError("unknown problem '" + name + "'");
}

void validate_problem(const ProblemSpec& p) {
  for (std::size_t i = 0; i < p.regions.size(); ++i) {
    const FlowState& w = p.regions[i].state;
    if (!is_admissible(p.eos, w.rho, w.p)) {
      std::ostringstream os;
      os << "problem '" << p.name << "': region " << i << " state (rho=" << w.rho
         << ", p=" << w.p << ") is outside the EOS validity region";
      throw DomainError(os.str());
    }
  }
}

}  // namespace realgas
