#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace realgas {

// ---------------------------------------------------------------------------
// Equation-of-state family p = kappa(rho) e + chi(rho)
// ---------------------------------------------------------------------------

struct PolytropicParams {
  double gamma = 1.4;
};

struct StiffenedGasParams {
  double gamma = 1.4;
  double p_inf = 0.0;
};

/// Jones-Wilkins-Lee reference curves, Mie-Grueneisen closure.
struct JwlParams {
  double rho0 = 1.0;   // g/cm^3
  double e0 = 0.0;     // Mbar cm^3/g
  double Gamma = 0.0;  // Grueneisen coefficient
  double A = 0.0;      // Mbar
  double B = 0.0;      // Mbar
  double R1 = 1.0;
  double R2 = 1.0;
};

/// Cochran-Chan reference curves, Mie-Grueneisen closure.
struct CochranChanParams {
  double rho0 = 1.0;
  double e0 = 0.0;
  double Gamma = 0.0;
  double A = 0.0;
  double B = 0.0;
  double eps1 = 2.0;
  double eps2 = 2.0;
};

enum class EosKind { Polytropic, Stiffened, Jwl, CochranChan };

/// Immutable EOS descriptor. Construction validates the parameter block and
/// throws DomainError on inadmissible values.
class EosModel {
public:
  using Params =
      std::variant<PolytropicParams, StiffenedGasParams, JwlParams, CochranChanParams>;

  static EosModel polytropic(double gamma);
  static EosModel stiffened(double gamma, double p_inf);
  static EosModel jwl(const JwlParams& params);
  static EosModel cochran_chan(const CochranChanParams& params);

  EosKind kind() const noexcept;
  std::string_view name() const noexcept;
  const Params& params() const noexcept { return params_; }

  friend bool operator==(const EosModel&, const EosModel&);

private:
  explicit EosModel(Params params) : params_(params) {}
  Params params_;
};

bool operator==(const EosModel& a, const EosModel& b);

/// kappa, chi and their analytic first derivatives at one density.
struct KappaChi {
  double kappa = 0.0;
  double chi = 0.0;
  double dkappa = 0.0;
  double dchi = 0.0;
};

KappaChi kappa_chi(const EosModel& model, double rho);

double pressure(const EosModel& model, double rho, double e);

/// Inverse of pressure() in e. Throws DegenerateEosError if kappa(rho) <= 0.
double internal_energy(const EosModel& model, double rho, double p);

/// c^2 = kappa' e + chi' + kappa p / rho^2. Throws ConvexityError if c^2 <= 0.
double sound_speed_squared(const EosModel& model, double rho, double p);
double sound_speed(const EosModel& model, double rho, double p);

/// Same value as sound_speed_squared(model, rho, p) given k = kappa_chi(model, rho).
double sound_speed_squared(const EosModel& model, const KappaChi& k, double rho, double p);

/// True when (rho, p) is inside the validity region (rho > 0, kappa > 0,
/// finite c^2 > 0). Never throws.
bool is_admissible(const EosModel& model, double rho, double p) noexcept;

// ---------------------------------------------------------------------------
// Local stiffened-gas approximation
// ---------------------------------------------------------------------------

/// Stiffened-gas pair (gamma, p_inf) with mu^2 = (gamma-1)/(gamma+1) cached.
struct StiffenedParams {
  double gamma = 1.4;
  double p_inf = 0.0;
  double mu2 = 1.0 / 6.0;

  static StiffenedParams make(double gamma, double p_inf);

  double sound_speed_squared(double rho, double p) const noexcept {
    return gamma * (p + p_inf) / rho;
  }
  double internal_energy(double rho, double p) const noexcept {
    return (p + gamma * p_inf) / ((gamma - 1.0) * rho);
  }
  double pressure(double rho, double e) const noexcept {
    return (gamma - 1.0) * rho * e - gamma * p_inf;
  }

  friend bool operator==(const StiffenedParams&, const StiffenedParams&) = default;
};

/// gamma = 1 + kappa(rho0)/rho0, p_inf = -chi(rho0)/gamma.
StiffenedParams local_stiffened_approx(const EosModel& model, double rho0);

/// Same value as local_stiffened_approx(model, rho0) given k = kappa_chi(model, rho0).
StiffenedParams local_stiffened_approx(const EosModel& model, const KappaChi& k, double rho0);

// ---------------------------------------------------------------------------
// Convexity sweep
// ---------------------------------------------------------------------------

struct ConvexityViolation {
  double rho = 0.0;
  double p = 0.0;
  double value = 0.0;
};

struct FundamentalDerivativeReport {
  double min_value = 0.0;
  double rho_at_min = 0.0;
  double p_at_min = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  ///< grid points outside the admissible region
  std::vector<ConvexityViolation> violations;
};

/// Fundamental derivative G = -(tau/2) p_tautau / p_tau along an isentrope.
double fundamental_derivative(const EosModel& model, double rho, double p);

/// Evaluates G on a samples x samples grid of [rho_lo, rho_hi] x [p_lo, p_hi].
FundamentalDerivativeReport fundamental_derivative_check(const EosModel& model,
                                                         double rho_lo, double rho_hi,
                                                         double p_lo, double p_hi,
                                                         int samples);

}  // namespace realgas
