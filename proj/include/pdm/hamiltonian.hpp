// The non-self-adjoint position-dependent-mass family
//
//   H psi = -(1/(2m)) psi'' + (alpha/2) f(m, m') psi' + V psi
//
// together with its gauge function g (g' = -alpha f m g), the maps between
// Psi, Phi and Omega = sqrt(g m) Psi, the self-adjoint dual in
// Sturm-Liouville form -(p Omega')' + W Omega with p = 1/(2m), Harrison's
// beta/gamma coefficients and the von Roos kinetic operator.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdm/core_model.hpp"
#include "pdm/finite_difference.hpp"

namespace pdm {

enum class CaseId { A, B, C, Custom };

inline char case_letter(CaseId id) {
  switch (id) {
    case CaseId::A: return 'a';
    case CaseId::B: return 'b';
    case CaseId::C: return 'c';
    case CaseId::Custom: return 'x';
  }
  return '?';
}

inline CaseId parse_case(const std::string& s) {
  if (s == "a" || s == "A") return CaseId::A;
  if (s == "b" || s == "B") return CaseId::B;
  if (s == "c" || s == "C") return CaseId::C;
  throw std::invalid_argument("unknown case '" + s + "' (expected a, b or c)");
}

/// f(m, m') with its partial derivatives, so that the composite
/// d/dy f(m(y), m'(y)) = f_m m' + f_{m'} m'' is available for any mass.
struct OrderingFunction {
  std::function<double(double, double)> f;
  std::function<double(double, double)> df_dm;
  std::function<double(double, double)> df_ddm;

  static OrderingFunction zero() {
    auto z = [](double, double) { return 0.0; };
    return {z, z, z};
  }
};

struct CaseSpec {
  CaseId id = CaseId::A;
  double alpha = 0.0;
  OrderingFunction f = OrderingFunction::zero();
  double c1 = 1.0;
  double c2 = 1.0;
  double alpha0_scaled = 0.0;

  static CaseSpec a() { return CaseSpec{}; }

  /// alpha = 1/c1, f = m'/m.
  static CaseSpec b(double c1 = 1.0) {
    if (!(c1 > 0.0)) throw std::invalid_argument("case b requires c1 > 0");
    CaseSpec s;
    s.id = CaseId::B;
    s.c1 = c1;
    s.alpha = 1.0 / c1;
    s.f = {[](double m, double dm) { return dm / m; },
           [](double m, double dm) { return -dm / (m * m); },
           [](double m, double) { return 1.0 / m; }};
    return s;
  }

  /// alpha = 2 c2 alpha0, f = 1/m. alpha0 defaults to 2 sqrt(|gamma_tilde|).
  static CaseSpec c(double gamma_tilde, double c2 = 1.0,
                    std::optional<double> alpha0_scaled = std::nullopt) {
    CaseSpec s;
    s.id = CaseId::C;
    s.c2 = c2;
    s.alpha0_scaled = alpha0_scaled.value_or(2.0 * std::sqrt(std::abs(gamma_tilde)));
    s.alpha = 2.0 * c2 * s.alpha0_scaled;
    s.f = {[](double m, double) { return 1.0 / m; },
           [](double m, double) { return -1.0 / (m * m); },
           [](double, double) { return 0.0; }};
    return s;
  }

  static CaseSpec custom(double alpha, OrderingFunction f) {
    if (!f.f || !f.df_dm || !f.df_ddm) {
      throw std::invalid_argument("custom ordering needs f and both partials");
    }
    CaseSpec s;
    s.id = CaseId::Custom;
    s.alpha = alpha;
    s.f = std::move(f);
    return s;
  }

  /// The three presets with default constants.
  static CaseSpec preset(CaseId id, double gamma_tilde) {
    switch (id) {
      case CaseId::A: return a();
      case CaseId::B: return b();
      case CaseId::C: return c(gamma_tilde);
      case CaseId::Custom: break;
    }
    throw std::invalid_argument("no preset for a custom case");
  }

  double f_at(const MassProfile& mass, double y) const { return f.f(mass.m(y), mass.dm(y)); }

  /// d/dy of y -> f(m(y), m'(y)).
  double f_prime_at(const MassProfile& mass, double y) const {
    const double m = mass.m(y);
    const double dm = mass.dm(y);
    return f.df_dm(m, dm) * dm + f.df_ddm(m, dm) * mass.d2m(y);
  }
};

// ---------------------------------------------------------------------------
// Gauge function

class GaugeFunction {
 public:
  enum class Form { Unit, MassExponential, LinearExponential };

  static GaugeFunction unit(const MassProfile& mass) {
    return GaugeFunction(Form::Unit, mass, 0.0);
  }
  /// exp(-m(y)/c1)
  static GaugeFunction mass_exponential(const MassProfile& mass, double c1) {
    return GaugeFunction(Form::MassExponential, mass, c1);
  }
  /// exp(-rate y)
  static GaugeFunction linear_exponential(const MassProfile& mass, double rate) {
    return GaugeFunction(Form::LinearExponential, mass, rate);
  }

  Form form() const { return form_; }
  const MassProfile& mass() const { return mass_; }

  double log_value(double y) const {
    switch (form_) {
      case Form::Unit: return 0.0;
      case Form::MassExponential: return -mass_.m(y) / param_;
      case Form::LinearExponential: return -param_ * y;
    }
    return 0.0;
  }

  double value(double y) const {
    if (form_ == Form::Unit) return 1.0;
    return std::exp(log_value(y));
  }

  double derivative(double y) const {
    switch (form_) {
      case Form::Unit: return 0.0;
      case Form::MassExponential: return -mass_.dm(y) / param_ * value(y);
      case Form::LinearExponential: return -param_ * value(y);
    }
    return 0.0;
  }

  /// 1/g without forming g first (keeps case-c tails finite).
  double reciprocal(double y) const {
    if (form_ == Form::Unit) return 1.0;
    return std::exp(-log_value(y));
  }

 private:
  GaugeFunction(Form form, const MassProfile& mass, double param)
      : form_(form), mass_(mass), param_(param) {}

  Form form_;
  MassProfile mass_;
  double param_;
};

inline GaugeFunction gauge_function(const CaseSpec& spec, const MassProfile& mass) {
  switch (spec.id) {
    case CaseId::A: return GaugeFunction::unit(mass);
    case CaseId::B:
      if (!(spec.c1 > 0.0)) throw std::invalid_argument("case b requires c1 > 0");
      return GaugeFunction::mass_exponential(mass, spec.c1);
    case CaseId::C:
      return GaugeFunction::linear_exponential(mass, 2.0 * spec.c2 * spec.alpha0_scaled);
    case CaseId::Custom: break;
  }
  throw std::invalid_argument("no closed-form gauge for a custom ordering; use solve_gauge_ode");
}

/// g'(y) + alpha f m g at y; zero for a consistent gauge.
inline double gauge_ode_residual(const CaseSpec& spec, const GaugeFunction& gauge, double y) {
  const auto& mass = gauge.mass();
  return gauge.derivative(y) + spec.alpha * spec.f_at(mass, y) * mass.m(y) * gauge.value(y);
}

/// Classical RK4 for g' = -alpha f(m, m') m g from (y0, g0), sampled on every
/// grid node. Works for any ordering, including custom ones.
inline std::vector<double> solve_gauge_ode(const CaseSpec& spec, const MassProfile& mass,
                                           double y0, double g0, const Grid& grid) {
  if (!(g0 > 0.0)) throw std::invalid_argument("initial gauge value must be positive");
  grid.validate();
  const Interval domain = mass.positivity_domain();
  grid.require_inside(domain);
  if (!domain.contains(y0)) throw DomainError("gauge ODE start point outside the domain");

  auto rate = [&](double y) { return -spec.alpha * spec.f_at(mass, y) * mass.m(y); };
  auto step = [&](double y, double g, double dy) {
    const double k1 = rate(y) * g;
    const double k2 = rate(y + 0.5 * dy) * (g + 0.5 * dy * k1);
    const double k3 = rate(y + 0.5 * dy) * (g + 0.5 * dy * k2);
    const double k4 = rate(y + dy) * (g + dy * k3);
    return g + dy / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  auto check = [&](double g, double y) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw DomainError("gauge ODE solution left (0, inf) at y = " + std::to_string(y));
    }
  };

  const std::size_t n = grid.n_points;
  std::vector<double> out(n);
  // First node at or above y0.
  std::size_t pivot = 0;
  while (pivot < n && grid.node(pivot) < y0) ++pivot;

  double y = y0;
  double g = g0;
  for (std::size_t i = pivot; i < n; ++i) {
    const double target = grid.node(i);
    if (target != y) g = step(y, g, target - y);
    y = target;
    check(g, y);
    out[i] = g;
  }
  y = y0;
  g = g0;
  for (std::size_t i = pivot; i-- > 0;) {
    const double target = grid.node(i);
    g = step(y, g, target - y);
    y = target;
    check(g, y);
    out[i] = g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operator application on samples

namespace detail {

inline void require_stencil_fit(const Grid& grid, std::size_t samples, fd::Order order) {
  if (samples != grid.n_points) throw std::invalid_argument("sample count does not match grid");
  if (grid.n_points < 5 || grid.n_points < 2 * fd::radius(order) + 1) {
    throw std::invalid_argument("operator application needs at least 5 grid points");
  }
}

inline void require_interior_mass(const MassProfile& mass, const Grid& grid, std::size_t r) {
  for (std::size_t i = r; i + r < grid.n_points; ++i) mass.require_positive(grid.node(i));
}

}  // namespace detail

/// H psi for the original (non-self-adjoint) Hamiltonian. Entries closer than
/// the stencil radius to either end are left at zero.
template <class T>
std::vector<T> apply_original_hamiltonian(const CaseSpec& spec, const MassProfile& mass,
                                          const PotentialProfile& potential,
                                          std::span<const T> psi, const Grid& grid,
                                          fd::Order order = fd::Order::Second) {
  detail::require_stencil_fit(grid, psi.size(), order);
  const std::size_t r = fd::radius(order);
  detail::require_interior_mass(mass, grid, r);
  const double h = grid.spacing();
  std::vector<T> out(psi.size(), T{});
  for (std::size_t i = r; i + r < psi.size(); ++i) {
    const double y = grid.node(i);
    const double m = mass.m(y);
    const T d1 = fd::first(psi, i, h, order);
    const T d2 = fd::second(psi, i, h, order);
    out[i] = -d2 / (2.0 * m) + (0.5 * spec.alpha * spec.f_at(mass, y)) * d1 +
             potential.V(y) * psi[i];
  }
  return out;
}

/// The self-adjoint dual -d/dy(p d/dy) + W with p = 1/(2m).
class DualHamiltonian {
 public:
  DualHamiltonian(CaseSpec spec, PotentialProfile potential)
      : spec_(std::move(spec)), potential_(potential) {}

  const CaseSpec& spec() const { return spec_; }
  const MassProfile& mass() const { return potential_.mass(); }
  const PotentialProfile& potential() const { return potential_; }
  Interval domain() const { return mass().positivity_domain(); }

  double p(double y) const {
    mass().require_positive(y);
    return 0.5 / mass().m(y);
  }

  double dp(double y) const {
    const double m = mass().m(y);
    return -mass().dm(y) / (2.0 * m * m);
  }

  /// W - V: the zeroth-order term produced by the similarity transform
  ///   (1/(4m)) [ a^2 f^2 m^2 / 2 - a f m' - a (f o m)' m - (3/2)(m'/m)^2 + m''/m ].
  double kinetic_potential(double y) const {
    const auto& ms = mass();
    ms.require_positive(y);
    const double m = ms.m(y);
    const double dm = ms.dm(y);
    const double d2m = ms.d2m(y);
    const double a = spec_.alpha;
    const double f = spec_.f_at(ms, y);
    const double fp = spec_.f_prime_at(ms, y);
    const double ratio = dm / m;
    const double bracket = 0.5 * a * a * f * f * m * m - a * f * dm - a * fp * m -
                           1.5 * ratio * ratio + d2m / m;
    return bracket / (4.0 * m);
  }

  double W(double y) const {
    const double w = potential_.V(y) + kinetic_potential(y);
    if (!std::isfinite(w)) throw DomainError("effective potential not finite");
    return w;
  }

  /// -(p u')' + W u on samples, via -p u'' - p' u' + W u.
  template <class T>
  std::vector<T> apply(std::span<const T> u, const Grid& grid,
                       fd::Order order = fd::Order::Second) const {
    detail::require_stencil_fit(grid, u.size(), order);
    const std::size_t r = fd::radius(order);
    detail::require_interior_mass(mass(), grid, r);
    const double h = grid.spacing();
    std::vector<T> out(u.size(), T{});
    for (std::size_t i = r; i + r < u.size(); ++i) {
      const double y = grid.node(i);
      out[i] = -p(y) * fd::second(u, i, h, order) - dp(y) * fd::first(u, i, h, order) +
               W(y) * u[i];
    }
    return out;
  }

  /// Same operator with the first-derivative and W terms written out the way
  /// the expanded dual is usually printed: -(1/2m) u'' + m'/(2m^2) u' + W u.
  template <class T>
  std::vector<T> apply_expanded(std::span<const T> u, const Grid& grid,
                                fd::Order order = fd::Order::Second) const {
    detail::require_stencil_fit(grid, u.size(), order);
    const std::size_t r = fd::radius(order);
    detail::require_interior_mass(mass(), grid, r);
    const double h = grid.spacing();
    std::vector<T> out(u.size(), T{});
    for (std::size_t i = r; i + r < u.size(); ++i) {
      const double y = grid.node(i);
      const double m = mass().m(y);
      out[i] = -fd::second(u, i, h, order) / (2.0 * m) +
               (mass().dm(y) / (2.0 * m * m)) * fd::first(u, i, h, order) + W(y) * u[i];
    }
    return out;
  }

 private:
  CaseSpec spec_;
  PotentialProfile potential_;
};

inline DualHamiltonian build_dual(const CaseSpec& spec, const MassProfile& mass,
                                  const PotentialProfile& potential) {
  if (mass.gamma_tilde() != potential.mass().gamma_tilde()) {
    throw std::invalid_argument("mass and potential use different deformations");
  }
  return DualHamiltonian(spec, potential);
}

inline std::function<double(double)> effective_potential(const CaseSpec& spec,
                                                         const MassProfile& mass,
                                                         const PotentialProfile& potential) {
  auto dual = build_dual(spec, mass, potential);
  return [dual](double y) { return dual.W(y); };
}

/// V plus the part of W that the case adds on top of case a, i.e. the
/// effective potential seen when the case-a kinetic operator is split off.
inline double effective_potential_over_case_a(const DualHamiltonian& dual, double y) {
  const DualHamiltonian base(CaseSpec::a(), dual.potential());
  return dual.potential().V(y) + dual.kinetic_potential(y) - base.kinetic_potential(y);
}

// ---------------------------------------------------------------------------
// Psi <-> Omega <-> Phi

namespace detail {

inline double sqrt_gm(const GaugeFunction& gauge, const MassProfile& mass, double y) {
  const double m = mass.m(y);
  const double g = gauge.value(y);
  if (!(g * m > 0.0) || !std::isfinite(g)) {
    throw DomainError("g m not positive at y = " + std::to_string(y));
  }
  return std::sqrt(g * m);
}

}  // namespace detail

inline std::complex<double> map_psi_to_omega(std::complex<double> psi,
                                             const GaugeFunction& gauge,
                                             const MassProfile& mass, double y) {
  return detail::sqrt_gm(gauge, mass, y) * psi;
}

inline std::complex<double> map_omega_to_psi(std::complex<double> omega,
                                             const GaugeFunction& gauge,
                                             const MassProfile& mass, double y) {
  return omega / detail::sqrt_gm(gauge, mass, y);
}

inline std::vector<std::complex<double>> map_psi_to_omega(
    std::span<const std::complex<double>> psi, const GaugeFunction& gauge,
    const MassProfile& mass, const Grid& grid) {
  if (psi.size() != grid.n_points) throw std::invalid_argument("sample count does not match grid");
  std::vector<std::complex<double>> out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out[i] = map_psi_to_omega(psi[i], gauge, mass, grid.node(i));
  }
  return out;
}

inline std::vector<std::complex<double>> map_omega_to_psi(
    std::span<const std::complex<double>> omega, const GaugeFunction& gauge,
    const MassProfile& mass, const Grid& grid) {
  if (omega.size() != grid.n_points) {
    throw std::invalid_argument("sample count does not match grid");
  }
  std::vector<std::complex<double>> out(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out[i] = map_omega_to_psi(omega[i], gauge, mass, grid.node(i));
  }
  return out;
}

/// Phi = g m conj(Psi).
inline std::complex<double> compute_phi(std::complex<double> psi, const GaugeFunction& gauge,
                                        const MassProfile& mass, double y) {
  const double s = detail::sqrt_gm(gauge, mass, y);
  return (s * s) * std::conj(psi);
}

inline std::vector<std::complex<double>> compute_phi(std::span<const std::complex<double>> psi,
                                                     const GaugeFunction& gauge,
                                                     const MassProfile& mass, const Grid& grid) {
  if (psi.size() != grid.n_points) throw std::invalid_argument("sample count does not match grid");
  std::vector<std::complex<double>> out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out[i] = compute_phi(psi[i], gauge, mass, grid.node(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Harrison's band-structure coefficients (hbar = 1)

class HarrisonCoefficients {
 public:
  explicit HarrisonCoefficients(GaugeFunction gauge) : gauge_(std::move(gauge)) {}

  /// beta = -1/(2 g m)
  double beta(double y) const {
    const auto& mass = gauge_.mass();
    mass.require_positive(y);
    return -0.5 * gauge_.reciprocal(y) / mass.m(y);
  }

  /// Harrison's gamma (not the deformation): the kinetic coefficient -1/(2m).
  double gamma_h(double y) const {
    const auto& mass = gauge_.mass();
    mass.require_positive(y);
    return -0.5 / mass.m(y);
  }

  const GaugeFunction& gauge() const { return gauge_; }

 private:
  GaugeFunction gauge_;
};

inline HarrisonCoefficients harrison_coefficients(const CaseSpec& /*spec*/,
                                                  const MassProfile& mass,
                                                  const GaugeFunction& gauge) {
  if (gauge.mass().gamma_tilde() != mass.gamma_tilde()) {
    throw std::invalid_argument("gauge built for a different mass profile");
  }
  return HarrisonCoefficients(gauge);
}

// ---------------------------------------------------------------------------
// von Roos kinetic operator
//   T = -(1/4) [m^a d m^b d m^c + m^c d m^b d m^a],  a + b + c = -1

struct VonRoosParams {
  double a = -0.5;
  double b = 0.0;
  double c = -0.5;

  static VonRoosParams make(double a, double b, double c) {
    if (std::abs(a + b + c + 1.0) > 1e-12) {
      throw std::invalid_argument("von Roos exponents must satisfy a + b + c = -1");
    }
    return {a, b, c};
  }

  /// Coefficient of (m'/m)^2 inside the bracket: -2(1 + a + a^2 + b + ab).
  double slope_coefficient() const { return -2.0 * (1.0 + a + a * a + b + a * b); }
  /// Coefficient of m''/m inside the bracket: 1 + b.
  double curvature_coefficient() const { return 1.0 + b; }

  /// The multiplicative part of T: (1/(4m)) [slope (m'/m)^2 + curvature m''/m].
  double zeroth_order(const MassProfile& mass, double y) const {
    const double m = mass.m(y);
    const double ratio = mass.dm(y) / m;
    return (slope_coefficient() * ratio * ratio + curvature_coefficient() * mass.d2m(y) / m) /
           (4.0 * m);
  }
};

template <class T>
std::vector<T> von_roos_kinetic_apply(const VonRoosParams& params, const MassProfile& mass,
                                      std::span<const T> psi, const Grid& grid,
                                      fd::Order order = fd::Order::Second) {
  const auto checked = VonRoosParams::make(params.a, params.b, params.c);
  detail::require_stencil_fit(grid, psi.size(), order);
  const std::size_t r = fd::radius(order);
  detail::require_interior_mass(mass, grid, r);
  const double h = grid.spacing();
  std::vector<T> out(psi.size(), T{});
  for (std::size_t i = r; i + r < psi.size(); ++i) {
    const double y = grid.node(i);
    const double m = mass.m(y);
    out[i] = -fd::second(psi, i, h, order) / (2.0 * m) +
             (mass.dm(y) / (2.0 * m * m)) * fd::first(psi, i, h, order) +
             checked.zeroth_order(mass, y) * psi[i];
  }
  return out;
}

/// Least-squares fit of a dual's W - V by the von Roos zeroth-order family
/// (1/(4m)) [A (m'/m)^2 + B m''/m], over unconstrained (A, B). Any (a, b)
/// maps to some (A, B), so a large residual rules out every von Roos ordering.
struct VonRoosFit {
  double slope = 0.0;          // A
  double curvature = 0.0;      // B
  double relative_rms = 0.0;   // ||residual|| / ||target||
  bool realizable = false;     // some real (a, b) produces (A, B)
};

inline VonRoosFit fit_von_roos(const DualHamiltonian& dual, std::span<const double> points) {
  const auto& mass = dual.mass();
  double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0, tt = 0;
  std::vector<double> b1(points.size()), b2(points.size()), target(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double y = points[i];
    const double m = mass.m(y);
    const double ratio = mass.dm(y) / m;
    b1[i] = ratio * ratio / (4.0 * m);
    b2[i] = mass.d2m(y) / m / (4.0 * m);
    target[i] = dual.kinetic_potential(y);
    s11 += b1[i] * b1[i];
    s12 += b1[i] * b2[i];
    s22 += b2[i] * b2[i];
    t1 += b1[i] * target[i];
    t2 += b2[i] * target[i];
    tt += target[i] * target[i];
  }
  VonRoosFit fit;
  const double det = s11 * s22 - s12 * s12;
  if (std::abs(det) > 1e-300) {
    fit.slope = (t1 * s22 - t2 * s12) / det;
    fit.curvature = (s11 * t2 - s12 * t1) / det;
  } else if (s22 > 0.0) {
    fit.curvature = t2 / s22;
  }
  double rr = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = target[i] - fit.slope * b1[i] - fit.curvature * b2[i];
    rr += r * r;
  }
  fit.relative_rms = tt > 0.0 ? std::sqrt(rr / tt) : 0.0;
  // b = B - 1; a solves a^2 + a (1 + b) + (1 + b) + A/2 = 0.
  const double bb = fit.curvature - 1.0;
  const double disc = (1.0 + bb) * (1.0 + bb) - 4.0 * ((1.0 + bb) + 0.5 * fit.slope);
  fit.realizable = disc >= 0.0;
  return fit;
}

}  // namespace pdm
