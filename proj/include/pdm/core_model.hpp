// Deformed-oscillator model: physical parameters, dimensionless scaling and
// the mass/potential profiles m(y) = 1 + g y^2, V(y) = y^2 / (2 m(y)).
//
// Everything downstream works in the dimensionless variable
//   y = (m0 k / hbar^2)^(1/4) x
// with energies in units of hbar*omega.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace pdm {

/// Raised when a quantity is evaluated where the model is undefined
/// (non-positive mass, non-bound level, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ModelParameters {
  double hbar = 1.0;
  double m0 = 1.0;
  double k = 1.0;
  double gamma = 0.0;  // 1/length^2, may be negative

  static ModelParameters make(double hbar, double m0, double k, double gamma) {
    if (!(hbar > 0.0) || !(m0 > 0.0) || !(k > 0.0)) {
      throw std::invalid_argument("hbar, m0 and k must be positive");
    }
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
    return ModelParameters{hbar, m0, k, gamma};
  }

  /// Unit hbar = m0 = k = 1, so gamma_tilde == gamma.
  static ModelParameters from_gamma_tilde(double gamma_tilde) {
    return make(1.0, 1.0, 1.0, gamma_tilde);
  }

  double omega() const { return std::sqrt(k / m0); }

  /// (m0 k / hbar^2)^(1/4): multiplies a length to give y.
  double inverse_length_scale() const { return std::sqrt(std::sqrt(m0 * k) / hbar); }

  double gamma_tilde() const { return gamma * hbar / std::sqrt(m0 * k); }

  double gamma_from_tilde(double gamma_tilde) const {
    return gamma_tilde * std::sqrt(m0 * k) / hbar;
  }

  /// lambda = 2E/(hbar omega) for an energy already in hbar*omega units.
  static double lambda_of(double energy) { return 2.0 * energy; }
};

inline double scale_to_dimensionless(const ModelParameters& p, double x) {
  return p.inverse_length_scale() * x;
}

inline double scale_from_dimensionless(const ModelParameters& p, double y) {
  return y / p.inverse_length_scale();
}

/// Open interval (lo, hi); infinite ends allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double y) const { return y > lo && y < hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  double width() const { return hi - lo; }
};

class MassProfile {
 public:
  explicit MassProfile(double gamma_tilde) : gamma_tilde_(gamma_tilde) {}

  double gamma_tilde() const { return gamma_tilde_; }
  double m(double y) const { return 1.0 + gamma_tilde_ * y * y; }
  double dm(double y) const { return 2.0 * gamma_tilde_ * y; }
  double d2m(double /*y*/) const { return 2.0 * gamma_tilde_; }

  Interval positivity_domain() const {
    if (gamma_tilde_ >= 0.0) return {};
    const double edge = 1.0 / std::sqrt(-gamma_tilde_);
    return {-edge, edge};
  }

  void require_positive(double y) const {
    if (!(m(y) > 0.0)) {
      throw DomainError("mass not positive at y = " + std::to_string(y));
    }
  }

 private:
  double gamma_tilde_;
};

inline Interval mass_positivity_domain(const MassProfile& mass) {
  return mass.positivity_domain();
}

class PotentialProfile {
 public:
  explicit PotentialProfile(double gamma_tilde) : mass_(gamma_tilde) {}

  double V(double y) const { return y * y / (2.0 * mass_.m(y)); }

  /// sup_y V(y) for gamma_tilde > 0 (the |y| -> infinity limit).
  double supremum() const {
    const double g = mass_.gamma_tilde();
    return g > 0.0 ? 1.0 / (2.0 * g) : std::numeric_limits<double>::infinity();
  }

  const MassProfile& mass() const { return mass_; }

 private:
  MassProfile mass_;
};

/// Uniform grid y_i = y_min + i h, i = 0 .. n_points-1.
struct Grid {
  double y_min = -12.0;
  double y_max = 12.0;
  std::size_t n_points = 4001;

  static Grid make(double y_min, double y_max, std::size_t n_points) {
    Grid g{y_min, y_max, n_points};
    g.validate();
    return g;
  }

  /// Grid with spacing as close as possible to h (rounded to a whole count).
  static Grid with_spacing(double y_min, double y_max, double h) {
    const auto intervals = static_cast<std::size_t>(std::llround((y_max - y_min) / h));
    return make(y_min, y_max, intervals + 1);
  }

  void validate() const {
    if (n_points < 3) throw std::invalid_argument("grid needs at least 3 points");
    if (!(y_min < y_max)) throw std::invalid_argument("grid requires y_min < y_max");
    if (!std::isfinite(y_min) || !std::isfinite(y_max)) {
      throw std::invalid_argument("grid bounds must be finite");
    }
  }

  double spacing() const { return (y_max - y_min) / static_cast<double>(n_points - 1); }

  /// Convex-combination form: node(i) == -node(n-1-i) bitwise when y_min == -y_max.
  double node(std::size_t i) const {
    const auto last = static_cast<double>(n_points - 1);
    const auto fi = static_cast<double>(i);
    return (y_min * (last - fi) + y_max * fi) / last;
  }

  /// Interior nodes must lie strictly inside the domain; endpoints may touch it.
  void require_inside(const Interval& domain) const {
    if (y_min < domain.lo || y_max > domain.hi) {
      throw DomainError("grid [" + std::to_string(y_min) + ", " + std::to_string(y_max) +
                        "] leaves the mass-positivity domain");
    }
  }

  /// Every second node of this grid (requires odd n_points).
  Grid coarsened() const {
    if (n_points % 2 == 0 || n_points < 5) {
      throw std::invalid_argument("coarsening needs an odd point count >= 5");
    }
    return make(y_min, y_max, (n_points + 1) / 2);
  }
};

}  // namespace pdm
