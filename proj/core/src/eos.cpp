#include "realgas/eos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "realgas/error.hpp"

namespace realgas {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

bool finite_all(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

// Reference curves of the Mie-Grueneisen forms. Each returns e_ref, p_ref and
// dp_ref/drho; de_ref/drho = p_ref/rho^2 holds for both families (the
// reference curve is an isentrope), which the kappa_chi derivative uses.
struct ReferenceCurve {
  double e_ref;
  double p_ref;
  double dp_ref;
};

ReferenceCurve jwl_reference(const JwlParams& m, double rho) {
  const double x = m.rho0 / rho;
  const double e1 = std::exp(-m.R1 * x);
  const double e2 = std::exp(-m.R2 * x);
  ReferenceCurve r;
  r.e_ref = m.A / (m.R1 * m.rho0) * e1 + m.B / (m.R2 * m.rho0) * e2 - m.e0;
  r.p_ref = m.A * e1 + m.B * e2;
  r.dp_ref = (m.A * m.R1 * e1 + m.B * m.R2 * e2) * x / rho;
  return r;
}

ReferenceCurve cochran_chan_reference(const CochranChanParams& m, double rho) {
  const double x = m.rho0 / rho;
  const double a1 = std::pow(x, -m.eps1);
  const double a2 = std::pow(x, -m.eps2);
  ReferenceCurve r;
  r.e_ref = -m.A / ((1.0 - m.eps1) * m.rho0) * (x * a1 - 1.0) +
            m.B / ((1.0 - m.eps2) * m.rho0) * (x * a2 - 1.0) - m.e0;
  r.p_ref = m.A * a1 - m.B * a2;
  r.dp_ref = (m.eps1 * m.A * a1 - m.eps2 * m.B * a2) / rho;
  return r;
}

KappaChi mie_grueneisen(double Gamma, const ReferenceCurve& r, double rho) {
  KappaChi k;
  k.kappa = Gamma * rho;
  k.dkappa = Gamma;
  k.chi = -Gamma * rho * r.e_ref + r.p_ref;
  // d/drho[-Gamma rho e_ref] = -Gamma e_ref - Gamma rho (p_ref / rho^2)
  k.dchi = -Gamma * r.e_ref - Gamma * r.p_ref / rho + r.dp_ref;
  return k;
}

}  // namespace

EosModel EosModel::polytropic(double gamma) {
  require(std::isfinite(gamma) && gamma > 1.0, "polytropic EOS requires gamma > 1");
  return EosModel(PolytropicParams{gamma});
}

EosModel EosModel::stiffened(double gamma, double p_inf) {
  require(std::isfinite(gamma) && gamma > 1.0, "stiffened EOS requires gamma > 1");
  require(std::isfinite(p_inf), "stiffened EOS requires finite p_inf");
  return EosModel(StiffenedGasParams{gamma, p_inf});
}

EosModel EosModel::jwl(const JwlParams& p) {
  require(finite_all({p.rho0, p.e0, p.Gamma, p.A, p.B, p.R1, p.R2}),
          "JWL parameters must be finite");
  require(p.rho0 > 0.0, "JWL requires rho0 > 0");
  require(p.A > 0.0, "JWL requires A > 0");
  require(p.R1 > 0.0 && p.R2 > 0.0, "JWL requires R1, R2 > 0");
  require(p.Gamma > 0.0, "JWL requires Gamma > 0");
  return EosModel(p);
}

EosModel EosModel::cochran_chan(const CochranChanParams& p) {
  require(finite_all({p.rho0, p.e0, p.Gamma, p.A, p.B, p.eps1, p.eps2}),
          "Cochran-Chan parameters must be finite");
  require(p.rho0 > 0.0, "Cochran-Chan requires rho0 > 0");
  require(p.Gamma > 0.0, "Cochran-Chan requires Gamma > 0");
  require(p.eps1 != 1.0 && p.eps2 != 1.0, "Cochran-Chan requires eps1, eps2 != 1");
  return EosModel(p);
}

EosKind EosModel::kind() const noexcept {
  return static_cast<EosKind>(params_.index());
}

std::string_view EosModel::name() const noexcept {
  switch (kind()) {
    case EosKind::Polytropic: return "polytropic";
    case EosKind::Stiffened: return "stiffened";
    case EosKind::Jwl: return "jwl";
    case EosKind::CochranChan: return "cochran-chan";
  }
  return "unknown";
}

bool operator==(const EosModel& a, const EosModel& b) {
  if (a.params_.index() != b.params_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const PolytropicParams& x) {
            return x.gamma == std::get<PolytropicParams>(b.params_).gamma;
          },
          [&](const StiffenedGasParams& x) {
            const auto& y = std::get<StiffenedGasParams>(b.params_);
            return x.gamma == y.gamma && x.p_inf == y.p_inf;
          },
          [&](const JwlParams& x) {
            const auto& y = std::get<JwlParams>(b.params_);
            return x.rho0 == y.rho0 && x.e0 == y.e0 && x.Gamma == y.Gamma && x.A == y.A &&
                   x.B == y.B && x.R1 == y.R1 && x.R2 == y.R2;
          },
          [&](const CochranChanParams& x) {
            const auto& y = std::get<CochranChanParams>(b.params_);
            return x.rho0 == y.rho0 && x.e0 == y.e0 && x.Gamma == y.Gamma && x.A == y.A &&
                   x.B == y.B && x.eps1 == y.eps1 && x.eps2 == y.eps2;
          },
      },
      a.params_);
}

KappaChi kappa_chi(const EosModel& model, double rho) {
  if (!(rho > 0.0)) throw DomainError("kappa_chi: density must be positive");
  return std::visit(
      Overloaded{
          [&](const PolytropicParams& m) {
            return KappaChi{(m.gamma - 1.0) * rho, 0.0, m.gamma - 1.0, 0.0};
          },
          [&](const StiffenedGasParams& m) {
            return KappaChi{(m.gamma - 1.0) * rho, -m.gamma * m.p_inf, m.gamma - 1.0, 0.0};
          },
          [&](const JwlParams& m) {
            return mie_grueneisen(m.Gamma, jwl_reference(m, rho), rho);
          },
          [&](const CochranChanParams& m) {
            return mie_grueneisen(m.Gamma, cochran_chan_reference(m, rho), rho);
          },
      },
      model.params());
}

double pressure(const EosModel& model, double rho, double e) {
  const KappaChi k = kappa_chi(model, rho);
  return k.kappa * e + k.chi;
}

double internal_energy(const EosModel& model, double rho, double p) {
  const KappaChi k = kappa_chi(model, rho);
  if (!(k.kappa > 0.0)) throw DegenerateEosError("internal_energy: kappa(rho) <= 0");
  return (p - k.chi) / k.kappa;
}

double sound_speed_squared(const EosModel& model, const KappaChi& k, double rho, double p) {
  double c2 = 0.0;
  switch (model.kind()) {
    case EosKind::Polytropic: {
      if (!(rho > 0.0)) throw DomainError("sound_speed: density must be positive");
      c2 = std::get<PolytropicParams>(model.params()).gamma * p / rho;
      break;
    }
    case EosKind::Stiffened: {
      if (!(rho > 0.0)) throw DomainError("sound_speed: density must be positive");
      const auto& m = std::get<StiffenedGasParams>(model.params());
      c2 = m.gamma * (p + m.p_inf) / rho;
      break;
    }
    default: {
      if (!(k.kappa > 0.0)) throw DegenerateEosError("sound_speed: kappa(rho) <= 0");
      const double e = (p - k.chi) / k.kappa;
      c2 = k.dkappa * e + k.dchi + k.kappa * p / (rho * rho);
      break;
    }
  }
  if (!(c2 > 0.0) || !std::isfinite(c2)) {
    std::ostringstream os;
    os << "sound speed squared " << c2 << " <= 0 at rho=" << rho << ", p=" << p;
    throw ConvexityError(os.str());
  }
  return c2;
}

double sound_speed_squared(const EosModel& model, double rho, double p) {
  const bool closed = model.kind() == EosKind::Polytropic || model.kind() == EosKind::Stiffened;
  return sound_speed_squared(model, closed ? KappaChi{} : kappa_chi(model, rho), rho, p);
}

double sound_speed(const EosModel& model, double rho, double p) {
  return std::sqrt(sound_speed_squared(model, rho, p));
}

bool is_admissible(const EosModel& model, double rho, double p) noexcept {
  if (!(rho > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) return false;
  try {
    const KappaChi k = kappa_chi(model, rho);
    (void)sound_speed_squared(model, k, rho, p);
    return k.kappa > 0.0;
  } catch (const Error&) {
    return false;
  }
}

StiffenedParams StiffenedParams::make(double gamma, double p_inf) {
  if (!(gamma > 1.0) || !std::isfinite(gamma))
    throw DegenerateEosError("stiffened approximation requires gamma > 1");
  StiffenedParams s;
  s.gamma = gamma;
  s.p_inf = p_inf;
  s.mu2 = (gamma - 1.0) / (gamma + 1.0);
  return s;
}

StiffenedParams local_stiffened_approx(const EosModel& model, const KappaChi& k, double rho0) {
  switch (model.kind()) {
    case EosKind::Polytropic:
      if (!(rho0 > 0.0)) throw DomainError("local_stiffened_approx: density must be positive");
      return StiffenedParams::make(std::get<PolytropicParams>(model.params()).gamma, 0.0);
    case EosKind::Stiffened: {
      if (!(rho0 > 0.0)) throw DomainError("local_stiffened_approx: density must be positive");
      const auto& m = std::get<StiffenedGasParams>(model.params());
      return StiffenedParams::make(m.gamma, m.p_inf);
    }
    default: break;
  }
  const double gamma = 1.0 + k.kappa / rho0;
  if (!(gamma > 1.0)) throw DegenerateEosError("local_stiffened_approx: gamma <= 1");
  return StiffenedParams::make(gamma, -k.chi / gamma);
}

StiffenedParams local_stiffened_approx(const EosModel& model, double rho0) {
  const bool closed = model.kind() == EosKind::Polytropic || model.kind() == EosKind::Stiffened;
  return local_stiffened_approx(model, closed ? KappaChi{} : kappa_chi(model, rho0), rho0);
}

namespace {

// One RK4 step of dp/drho = c^2(rho, p) along an isentrope.
double isentrope_step(const EosModel& model, double rho, double p, double h) {
  auto f = [&](double r, double q) { return sound_speed_squared(model, r, q); };
  const double k1 = f(rho, p);
  const double k2 = f(rho + 0.5 * h, p + 0.5 * h * k1);
  const double k3 = f(rho + 0.5 * h, p + 0.5 * h * k2);
  const double k4 = f(rho + h, p + h * k3);
  return p + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double isentrope_pressure(const EosModel& model, double rho, double p, double drho) {
  constexpr int kSubsteps = 4;
  const double h = drho / kSubsteps;
  for (int i = 0; i < kSubsteps; ++i) {
    p = isentrope_step(model, rho, p, h);
    rho += h;
  }
  return p;
}

}  // namespace

double fundamental_derivative(const EosModel& model, double rho, double p) {
  switch (model.kind()) {
    case EosKind::Polytropic:
      return 0.5 * (std::get<PolytropicParams>(model.params()).gamma + 1.0);
    case EosKind::Stiffened:
      return 0.5 * (std::get<StiffenedGasParams>(model.params()).gamma + 1.0);
    default: break;
  }
  // G = 1 + rho (dc^2/drho)_S / (2 c^2), central difference along the isentrope.
  const double h = 1e-4 * rho;
  const double c2 = sound_speed_squared(model, rho, p);
  const double p_plus = isentrope_pressure(model, rho, p, h);
  const double p_minus = isentrope_pressure(model, rho, p, -h);
  const double c2_plus = sound_speed_squared(model, rho + h, p_plus);
  const double c2_minus = sound_speed_squared(model, rho - h, p_minus);
  return 1.0 + rho * (c2_plus - c2_minus) / (2.0 * h) / (2.0 * c2);
}

FundamentalDerivativeReport fundamental_derivative_check(const EosModel& model,
                                                         double rho_lo, double rho_hi,
                                                         double p_lo, double p_hi,
                                                         int samples) {
  if (!(rho_lo > 0.0 && rho_hi > rho_lo) || !(p_hi > p_lo) || samples < 2)
    throw DomainError("fundamental_derivative_check: invalid sampling ranges");
  FundamentalDerivativeReport report;
  report.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double rho = rho_lo + (rho_hi - rho_lo) * i / (samples - 1);
    for (int j = 0; j < samples; ++j) {
      const double p = p_lo + (p_hi - p_lo) * j / (samples - 1);
      double g = 0.0;
      try {
        if (!is_admissible(model, rho, p)) {
          ++report.skipped;
          continue;
        }
        g = fundamental_derivative(model, rho, p);
      } catch (const Error&) {
        ++report.skipped;
        continue;
      }
      ++report.evaluated;
      if (g < report.min_value) {
        report.min_value = g;
        report.rho_at_min = rho;
        report.p_at_min = p;
      }
      if (!(g > 0.0)) report.violations.push_back({rho, p, g});
    }
  }
  return report;
}

}  // namespace realgas
