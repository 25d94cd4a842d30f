// Closed-form bound states of the deformed oscillator
//   m(y) = 1 + g y^2,  V(y) = y^2 / (2 m(y))
// for the three preset orderings (c1 = 1, c2 = 1, alpha0 = 2 sqrt(g)).
//
// Every eigenfunction has the shape
//   Psi_n(y) = exp(q(y)) H_n(kappa y),   q quadratic,  kappa = s^(1/2)
// where s > 0 is the Gaussian width fixed by the level energy.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdm/core_model.hpp"
#include "pdm/finite_difference.hpp"
#include "pdm/hamiltonian.hpp"
#include "pdm/hermite.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {

class UnverifiedContinuation : public std::runtime_error {
 public:
  UnverifiedContinuation(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// c0 + c1 y + c2 y^2
struct QuadraticExponent {
  double constant = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;

  double operator()(double y) const { return constant + y * (linear + y * quadratic); }
  double derivative(double y) const { return linear + 2.0 * quadratic * y; }
};

namespace detail {

inline void require_preset(CaseId id) {
  if (id == CaseId::Custom) throw std::invalid_argument("closed forms exist only for cases a, b, c");
}

/// Energy from the closed form without bound-state checks; valid algebra for
/// either sign of the deformation.
inline double raw_energy(CaseId id, unsigned n, double g) {
  const double N = 2.0 * n + 1.0;
  const double N2 = N * N;
  switch (id) {
    case CaseId::A:
      if (g >= 0.0) return N / (g * N + std::sqrt(4.0 + g * g * N2));
      return 0.25 * N * (-g * N + std::sqrt(4.0 + g * g * N2));
    case CaseId::B: {
      const double root = std::sqrt(4.0 + g * g * (8.0 + N2));
      if (g >= 0.0) return (N2 * (1.0 + g * g) - g * g) / (N * root + g * (2.0 + N2));
      return 0.25 * (-(2.0 + N2) * g + N * root);
    }
    case CaseId::C: {
      const double radicand = 4.0 * (1.0 - 4.0 * g * g) + g * g * N2;
      if (radicand < 0.0) {
        throw DomainError("case c level " + std::to_string(n) +
                          ": negative radicand in the energy formula");
      }
      const double root = std::sqrt(radicand);
      if (g >= 0.0 && N2 >= 8.0) return (N2 - 16.0 * g * g) / (N * root + g * (N2 - 8.0));
      return 0.25 * (-(N2 - 8.0) * g + N * root);
    }
    case CaseId::Custom: break;
  }
  throw std::invalid_argument("closed forms exist only for cases a, b, c");
}

/// s^2 for a level of energy e (the radicand under the Gaussian width).
inline double width_squared(CaseId id, double g, double e) {
  if (id == CaseId::B) return 1.0 + g * g - 2.0 * g * e;
  return 1.0 - 2.0 * g * e;
}

/// s implied by the Hermite index balance: A: sN = 2E, B: sN = 2E + g, C: sN = 2E - 4g.
inline double width_from_balance(CaseId id, unsigned n, double g, double e) {
  const double N = 2.0 * n + 1.0;
  switch (id) {
    case CaseId::A: return 2.0 * e / N;
    case CaseId::B: return (2.0 * e + g) / N;
    case CaseId::C: return (2.0 * e - 4.0 * g) / N;
    case CaseId::Custom: break;
  }
  return 0.0;
}

}  // namespace detail

/// E_n in hbar*omega units for gamma_tilde >= 0.
inline double energy_level(CaseId id, unsigned n, double gamma_tilde) {
  detail::require_preset(id);
  if (gamma_tilde < 0.0) {
    throw std::invalid_argument("energy_level requires gamma_tilde >= 0; use negative_gamma_state");
  }
  const double e = detail::raw_energy(id, n, gamma_tilde);
  const double s2 = detail::width_squared(id, gamma_tilde, e);
  const double s_balance = detail::width_from_balance(id, n, gamma_tilde, e);
  if (!(s2 > 0.0) || !(s_balance > 0.0)) {
    throw DomainError(std::string("case ") + case_letter(id) + " level " + std::to_string(n) +
                      " is not a bound state at gamma_tilde = " + std::to_string(gamma_tilde));
  }
  return e;
}

inline double energy_threshold(CaseId id, double gamma_tilde) {
  detail::require_preset(id);
  if (!(gamma_tilde > 0.0)) throw std::invalid_argument("threshold requires gamma_tilde > 0");
  if (id == CaseId::B) return (gamma_tilde * gamma_tilde + 1.0) / (2.0 * gamma_tilde);
  return 1.0 / (2.0 * gamma_tilde);
}

/// Leading 1/n^2 coefficient of threshold - E_n, divided by n^2.
inline double asymptotic_gap(CaseId id, unsigned n, double gamma_tilde) {
  detail::require_preset(id);
  if (!(gamma_tilde > 0.0)) throw std::invalid_argument("asymptotic gap requires gamma_tilde > 0");
  if (n == 0) throw std::invalid_argument("asymptotic gap requires n >= 1");
  const double g = gamma_tilde;
  double numerator = 1.0;
  if (id == CaseId::B) numerator = (2.0 * g * g + 1.0) * (2.0 * g * g + 1.0);
  if (id == CaseId::C) numerator = (4.0 * g * g - 1.0) * (4.0 * g * g - 1.0);
  const double nn = static_cast<double>(n);
  return numerator / (8.0 * g * g * g * nn * nn);
}

/// Unnormalized stationary state with its Omega image and normalization.
class EigenState {
 public:
  CaseId case_id() const { return case_; }
  unsigned n() const { return n_; }
  double gamma_tilde() const { return mass_.gamma_tilde(); }
  double energy() const { return energy_; }
  double lambda() const { return 2.0 * energy_; }
  double normalization() const { return norm_; }
  double kappa() const { return kappa_; }
  const QuadraticExponent& psi_exponent() const { return psi_exp_; }
  const QuadraticExponent& omega_exponent() const { return omega_exp_; }
  const MassProfile& mass() const { return mass_; }
  const GaugeFunction& gauge() const { return gauge_; }
  const CaseSpec& spec() const { return spec_; }
  Interval domain() const { return mass_.positivity_domain(); }

  double psi_real(double y) const {
    require_domain(y);
    return norm_ * std::exp(psi_exp_(y)) * HermiteEvaluator::value(n_, kappa_ * y);
  }
  std::complex<double> psi(double y) const { return psi_real(y); }

  /// d Psi / dy via H_n' = 2n H_{n-1}.
  double psi_derivative(double y) const {
    require_domain(y);
    const auto [hn, hprev] = HermiteEvaluator::value_pair(n_, kappa_ * y);
    const double dh = n_ == 0 ? 0.0 : 2.0 * n_ * hprev;
    return norm_ * std::exp(psi_exp_(y)) * (psi_exp_.derivative(y) * hn + kappa_ * dh);
  }

  /// Omega = sqrt(g m) Psi, evaluated with the gauge folded into the exponent.
  double omega_real(double y) const {
    require_domain(y);
    return norm_ * std::sqrt(mass_.m(y)) * std::exp(omega_exp_(y)) *
           HermiteEvaluator::value(n_, kappa_ * y);
  }
  std::complex<double> omega(double y) const { return omega_real(y); }

  /// Phi = g m conj(Psi).
  std::complex<double> phi(double y) const { return compute_phi(psi(y), gauge_, mass_, y); }

  /// rho = g m |Psi|^2 (= |Omega|^2).
  double density(double y) const {
    const double w = omega_real(y);
    return w * w;
  }

  /// Rescale so that the Omega norm on the grid is one (Simpson).
  void normalize_on(const Grid& grid) {
    norm_ = 1.0;
    const Interval dom = domain();
    std::vector<double> values(grid.n_points, 0.0);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      const double y = grid.node(i);
      if (dom.contains(y)) values[i] = density(y);
    }
    const double norm2 = integrate_uniform<double>(values, grid.spacing());
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw DomainError("state not normalizable on grid");
    norm_ = 1.0 / std::sqrt(norm2);
  }

  static EigenState build(CaseId id, unsigned n, double gamma_tilde, double energy) {
    detail::require_preset(id);
    EigenState st(id, n, gamma_tilde, energy);
    const double g = gamma_tilde;
    const double s2 = detail::width_squared(id, g, energy);
    if (!(s2 > 0.0)) throw DomainError("negative Gaussian-width radicand");
    const double s = std::sqrt(s2);
    st.kappa_ = std::sqrt(s);
    switch (id) {
      case CaseId::A: st.psi_exp_ = {0.0, 0.0, -0.5 * s}; break;
      case CaseId::B: st.psi_exp_ = {0.0, 0.0, -0.5 * (s - g)}; break;
      case CaseId::C: st.psi_exp_ = {0.0, st.spec_.c2 * st.spec_.alpha0_scaled, -0.5 * s}; break;
      case CaseId::Custom: break;
    }
    // log g as a quadratic, halved, added to the Psi exponent.
    QuadraticExponent log_g;
    if (id == CaseId::B) log_g = {-1.0 / st.spec_.c1, 0.0, -g / st.spec_.c1};
    if (id == CaseId::C) log_g = {0.0, -2.0 * st.spec_.c2 * st.spec_.alpha0_scaled, 0.0};
    st.omega_exp_ = {st.psi_exp_.constant + 0.5 * log_g.constant,
                     st.psi_exp_.linear + 0.5 * log_g.linear,
                     st.psi_exp_.quadratic + 0.5 * log_g.quadratic};
    return st;
  }

 private:
  EigenState(CaseId id, unsigned n, double gamma_tilde, double energy)
      : case_(id),
        n_(n),
        energy_(energy),
        mass_(gamma_tilde),
        spec_(CaseSpec::preset(id, gamma_tilde)),
        gauge_(gauge_function(spec_, mass_)) {}

  void require_domain(double y) const {
    if (!domain().contains(y)) {
      throw DomainError("state evaluated outside the mass-positivity domain at y = " +
                        std::to_string(y));
    }
  }

  CaseId case_;
  unsigned n_;
  double energy_;
  MassProfile mass_;
  CaseSpec spec_;
  GaugeFunction gauge_;
  double norm_ = 1.0;
  double kappa_ = 1.0;
  QuadraticExponent psi_exp_;
  QuadraticExponent omega_exp_;
};

/// Unnormalized Psi_n(y).
inline std::complex<double> eigenfunction_eval(CaseId id, unsigned n, double gamma_tilde, double y) {
  const auto st = EigenState::build(id, n, gamma_tilde, energy_level(id, n, gamma_tilde));
  return st.psi(y);
}

inline Grid default_normalization_grid() { return Grid::make(-12.0, 12.0, 4001); }

/// Normalized eigenstate for gamma_tilde >= 0.
inline EigenState make_eigenstate(CaseId id, unsigned n, double gamma_tilde,
                                  const Grid& normalization_grid = default_normalization_grid()) {
  auto st = EigenState::build(id, n, gamma_tilde, energy_level(id, n, gamma_tilde));
  st.normalize_on(normalization_grid);
  return st;
}

// ---------------------------------------------------------------------------
// ODE residual oracles

template <class F>
std::vector<double> sample(const Grid& grid, F&& f) {
  std::vector<double> out(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) out[i] = f(grid.node(i));
  return out;
}

namespace detail {

inline double max_interior_residual(std::span<const double> applied, std::span<const double> u,
                                    double energy, std::size_t r) {
  double res = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) scale = std::max(scale, std::abs(u[i]));
  for (std::size_t i = r; i + r < u.size(); ++i) {
    res = std::max(res, std::abs(applied[i] - energy * u[i]));
  }
  return scale > 0.0 ? res / scale : res;
}

}  // namespace detail

/// max |H Psi - E Psi| / max |Psi| over interior nodes.
inline double original_residual(const EigenState& st, const Grid& grid,
                                fd::Order order = fd::Order::Fourth) {
  const auto psi = sample(grid, [&](double y) { return st.psi_real(y); });
  const PotentialProfile potential(st.gamma_tilde());
  const auto hpsi = apply_original_hamiltonian<double>(st.spec(), st.mass(), potential, psi, grid, order);
  return detail::max_interior_residual(hpsi, psi, st.energy(), fd::radius(order));
}

/// max |H_dual Omega - E Omega| / max |Omega| over interior nodes.
inline double dual_residual(const EigenState& st, const Grid& grid,
                            fd::Order order = fd::Order::Fourth) {
  const auto omega = sample(grid, [&](double y) { return st.omega_real(y); });
  const DualHamiltonian dual(st.spec(), PotentialProfile(st.gamma_tilde()));
  const auto homega = dual.apply<double>(omega, grid, order);
  return detail::max_interior_residual(homega, omega, st.energy(), fd::radius(order));
}

// ---------------------------------------------------------------------------
// Negative deformation: confined states on |y| < 1/sqrt|g|

/// Residual-gate grid for a negative deformation: the central 90% of the
/// open domain at spacing h.
inline Grid confined_residual_grid(double gamma_tilde, double h = 5e-4, double keep = 0.9) {
  const double edge = keep / std::sqrt(-gamma_tilde);
  return Grid::with_spacing(-edge, edge, h);
}

inline constexpr double kContinuationTolerance = 1e-6;

/// Closed-form level for gamma_tilde < 0 without building the state; only the
/// case-b branch is backed by a verified eigenfunction.
inline double negative_gamma_energy(CaseId id, unsigned n, double gamma_tilde) {
  detail::require_preset(id);
  if (!(gamma_tilde < 0.0)) throw std::invalid_argument("negative_gamma_energy requires gamma_tilde < 0");
  return detail::raw_energy(id, n, gamma_tilde);
}

inline EigenState negative_gamma_state(CaseId id, unsigned n, double gamma_tilde) {
  detail::require_preset(id);
  if (!(gamma_tilde < 0.0)) throw std::invalid_argument("negative_gamma_state requires gamma_tilde < 0");
  const double e = detail::raw_energy(id, n, gamma_tilde);
  auto st = EigenState::build(id, n, gamma_tilde, e);
  const double edge = 1.0 / std::sqrt(-gamma_tilde);
  st.normalize_on(Grid::make(-edge, edge, 4001));
  if (id != CaseId::B) {
    const Grid gate = confined_residual_grid(gamma_tilde);
    const double r = std::max(original_residual(st, gate), dual_residual(st, gate));
    if (!(r <= kContinuationTolerance)) {
      throw UnverifiedContinuation(std::string("unverified continuation: case ") + case_letter(id) +
                                       " level " + std::to_string(n) + " residual " + std::to_string(r),
                                   r);
    }
  }
  return st;
}

}  // namespace pdm
