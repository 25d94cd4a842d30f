// Independent numerical oracle: the dual Hamiltonian discretised as a
// symmetric tridiagonal matrix (Dirichlet ends, half-point p), lowest
// eigenpairs by Sturm-sequence bisection and inverse iteration, plus the
// continuity-equation and grid-convergence checks built on top.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdm/analytic.hpp"
#include "pdm/core_model.hpp"
#include "pdm/finite_difference.hpp"
#include "pdm/hamiltonian.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {

struct DiscreteOperator {
  std::vector<double> diagonal;      // interior nodes 1 .. n_points-2
  std::vector<double> off_diagonal;  // size() - 1 entries, shared by both triangles
  Grid grid;
  CaseId case_id = CaseId::A;

  std::size_t size() const { return diagonal.size(); }

  double entry(std::size_t i, std::size_t j) const {
    if (i == j) return diagonal[i];
    const std::size_t lo = std::min(i, j);
    if (std::max(i, j) - lo == 1) return off_diagonal[lo];
    return 0.0;
  }

  /// Infinity norm (max absolute row sum).
  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      double row = std::abs(diagonal[i]);
      if (i > 0) row += std::abs(off_diagonal[i - 1]);
      if (i + 1 < size()) row += std::abs(off_diagonal[i]);
      best = std::max(best, row);
    }
    return best;
  }

  std::vector<double> apply(std::span<const double> x) const {
    std::vector<double> y(size());
    for (std::size_t i = 0; i < size(); ++i) {
      double v = diagonal[i] * x[i];
      if (i > 0) v += off_diagonal[i - 1] * x[i - 1];
      if (i + 1 < size()) v += off_diagonal[i] * x[i + 1];
      y[i] = v;
    }
    return y;
  }
};

inline DiscreteOperator discretize_dual(const DualHamiltonian& dual, const Grid& grid) {
  grid.validate();
  grid.require_inside(dual.domain());
  const double h = grid.spacing();
  const double h2 = h * h;
  const std::size_t n = grid.n_points - 2;
  DiscreteOperator op;
  op.grid = grid;
  op.case_id = dual.spec().id;
  op.diagonal.resize(n);
  op.off_diagonal.resize(n > 0 ? n - 1 : 0);
  // Half-point couplings p(y_{i+1/2}) / h^2 for i = 0 .. n_points-2.
  std::vector<double> coupling(grid.n_points - 1);
  for (std::size_t i = 0; i + 1 < grid.n_points; ++i) {
    const double mid = 0.5 * (grid.node(i) + grid.node(i + 1));
    coupling[i] = dual.p(mid) / h2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double y = grid.node(i + 1);
    const double w = dual.W(y);
    op.diagonal[i] = coupling[i] + coupling[i + 1] + w;
    if (!std::isfinite(op.diagonal[i])) throw DomainError("non-finite diagonal entry");
    if (i + 1 < n) op.off_diagonal[i] = -coupling[i + 1];
  }
  return op;
}

/// Number of eigenvalues strictly below lambda (LDL^T inertia).
inline std::size_t sturm_count(const DiscreteOperator& op, double lambda) {
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, op.norm_inf());
  std::size_t count = 0;
  double piv = 1.0;
  for (std::size_t i = 0; i < op.size(); ++i) {
    double d = op.diagonal[i] - lambda;
    if (i > 0) {
      const double b = op.off_diagonal[i - 1];
      d -= b * b / piv;
    }
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
    piv = d;
  }
  return count;
}

class BisectionError : public std::runtime_error {
 public:
  BisectionError(std::size_t index, double lo, double hi)
      : std::runtime_error(message(index, lo, hi)), lo_(lo), hi_(hi) {}
  double lower() const { return lo_; }
  double upper() const { return hi_; }

 private:
  static std::string message(std::size_t index, double lo, double hi) {
    std::ostringstream os;
    os.precision(17);
    os << "bisection for eigenvalue " << index << " did not converge; bracket [" << lo << ", "
       << hi << "]";
    return os.str();
  }
  double lo_, hi_;
};

struct EigenResult {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // full grid, zero ends, unit Simpson norm
  std::vector<double> residual_norms;             // ||A x - l x||_2 / ||x||_2
};

struct EigenOptions {
  double tolerance = 1e-12;
  int max_iterations = 200;
  bool vectors = true;
};

namespace detail {

inline std::pair<double, double> gershgorin(const DiscreteOperator& op) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < op.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < op.size()) r += std::abs(op.off_diagonal[i]);
    lo = std::min(lo, op.diagonal[i] - r);
    hi = std::max(hi, op.diagonal[i] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

/// Solve (T - sigma I) x = rhs by LU with partial pivoting (tridiagonal).
inline void shifted_solve(const DiscreteOperator& op, double sigma, std::vector<double>& x) {
  const std::size_t n = op.size();
  std::vector<double> dl(n > 0 ? n - 1 : 0), d(n), du(n > 0 ? n - 1 : 0), du2(n > 1 ? n - 2 : 0, 0.0);
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = op.diagonal[i] - sigma;
  for (std::size_t i = 0; i + 1 < n; ++i) dl[i] = du[i] = op.off_diagonal[i];
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, op.norm_inf());

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) std::swap(x[i], x[i + 1]);
    x[i + 1] -= dl[i] * x[i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = x[ii];
    if (ii + 1 < n) v -= du[ii] * x[ii + 1];
    if (ii + 2 < n) v -= du2[ii] * x[ii + 2];
    x[ii] = v / d[ii];
  }
}

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace detail

/// The k smallest eigenvalues by bisection on the Sturm count.
inline std::vector<double> lowest_eigenvalues(const DiscreteOperator& op, std::size_t k,
                                              const EigenOptions& opts = {}) {
  if (k < 1 || k > op.size()) throw std::invalid_argument("k out of range for eigen_lowest_k");
  const auto [glo, ghi] = detail::gershgorin(op);
  std::vector<double> values(k);
  double floor = glo;
  for (std::size_t j = 0; j < k; ++j) {
    double lo = floor;
    double hi = ghi;
    int it = 0;
    while (hi - lo > opts.tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
      if (++it > opts.max_iterations) throw BisectionError(j, lo, hi);
      if (sturm_count(op, mid) > j) hi = mid;
      else lo = mid;
    }
    values[j] = 0.5 * (lo + hi);
    floor = lo;
  }
  return values;
}

inline EigenResult eigen_lowest_k(const DiscreteOperator& op, std::size_t k,
                                  const EigenOptions& opts = {}) {
  EigenResult result;
  result.eigenvalues = lowest_eigenvalues(op, k, opts);
  if (!opts.vectors) return result;

  const std::size_t n = op.size();
  const double anorm = op.norm_inf();
  std::vector<std::vector<double>> interior;
  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = result.eigenvalues[j];
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.5 * std::sin(0.37 * static_cast<double>(i + j));
    for (int pass = 0; pass < 4; ++pass) {
      // Keep clustered vectors apart.
      for (std::size_t q = 0; q < interior.size(); ++q) {
        if (std::abs(result.eigenvalues[q] - lambda) > 1e-7 * std::max(1.0, anorm)) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += interior[q][i] * x[i];
        for (std::size_t i = 0; i < n; ++i) x[i] -= dot * interior[q][i];
      }
      detail::shifted_solve(op, lambda, x);
      const double nx = detail::norm2(x);
      if (!(nx > 0.0) || !std::isfinite(nx)) throw std::runtime_error("inverse iteration broke down");
      for (double& v : x) v /= nx;
    }
    // Deterministic sign: largest component positive.
    const auto big = std::max_element(x.begin(), x.end(),
                                      [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*big < 0.0) for (double& v : x) v = -v;

    const auto ax = op.apply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (ax[i] - lambda * x[i]) * (ax[i] - lambda * x[i]);
    result.residual_norms.push_back(std::sqrt(r));
    interior.push_back(x);

    std::vector<double> full(op.grid.n_points, 0.0);
    std::copy(x.begin(), x.end(), full.begin() + 1);
    std::vector<double> sq(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) sq[i] = full[i] * full[i];
    const double scale = 1.0 / std::sqrt(integrate_uniform<double>(sq, op.grid.spacing()));
    for (double& v : full) v *= scale;
    result.eigenvectors.push_back(std::move(full));
  }
  return result;
}

/// Lowest-k eigenvalues of the dual on a grid and on the grid with every
/// second node, combined by Richardson extrapolation (4 l_h - l_2h) / 3.
struct SpectrumEstimate {
  std::vector<double> fine;
  std::vector<double> coarse;
  std::vector<double> extrapolated;
};

inline SpectrumEstimate richardson_spectrum(const DualHamiltonian& dual, const Grid& grid,
                                            std::size_t k) {
  SpectrumEstimate est;
  const EigenOptions values_only{1e-12, 200, false};
  est.fine = lowest_eigenvalues(discretize_dual(dual, grid), k, values_only);
  est.coarse = lowest_eigenvalues(discretize_dual(dual, grid.coarsened()), k, values_only);
  est.extrapolated.resize(k);
  for (std::size_t j = 0; j < k; ++j) est.extrapolated[j] = (4.0 * est.fine[j] - est.coarse[j]) / 3.0;
  return est;
}

// ---------------------------------------------------------------------------
// Continuity equation for a two-level superposition

/// max |d_t rho + d_y j| over interior nodes, relative to the larger of the two
/// terms. gauge_override replaces g in both rho and j (negative controls).
inline double continuity_residual(const EigenState& a, const EigenState& b, double t,
                                  const Grid& grid,
                                  const GaugeFunction* gauge_override = nullptr) {
  if (a.case_id() != b.case_id() || a.gamma_tilde() != b.gamma_tilde()) {
    throw std::invalid_argument("continuity check needs two states of one Hamiltonian");
  }
  if (a.n() == b.n()) return 0.0;
  grid.validate();
  grid.require_inside(a.domain());
  if (grid.n_points < 5) throw std::invalid_argument("continuity check needs at least 5 points");
  const GaugeFunction& gauge = gauge_override ? *gauge_override : a.gauge();
  const MassProfile& mass = a.mass();
  const double de = a.energy() - b.energy();
  const std::complex<double> pa = std::polar(1.0, -a.energy() * t);
  const std::complex<double> pb = std::polar(1.0, -b.energy() * t);

  const std::size_t n = grid.n_points;
  std::vector<double> drho(n), current(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = grid.node(i);
    const double ua = a.psi_real(y);
    const double ub = b.psi_real(y);
    const double g = gauge.value(y);
    drho[i] = g * mass.m(y) * (-2.0 * ua * ub * de * std::sin(de * t));
    const std::complex<double> psi = ua * pa + ub * pb;
    const std::complex<double> dpsi = a.psi_derivative(y) * pa + b.psi_derivative(y) * pb;
    current[i] = g * std::imag(dpsi * std::conj(psi));
  }
  const double h = grid.spacing();
  double res = 0.0;
  double scale = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double dj = fd::first<double>(current, i, h, fd::Order::Fourth);
    res = std::max(res, std::abs(drho[i] + dj));
    scale = std::max({scale, std::abs(drho[i]), std::abs(dj)});
  }
  return scale > 0.0 ? res / scale : res;
}

// ---------------------------------------------------------------------------
// Grid convergence of the raw (unextrapolated) eigenvalue

struct ConvergenceResult {
  bool saturated = false;
  double slope = 0.0;
  std::vector<double> spacings;
  std::vector<double> errors;
};

inline constexpr double kSaturationFloor = 1e-11;

/// Least-squares slope of log(error) against log(h); saturated when any error
/// falls below the floor, in which case no slope is fitted.
inline ConvergenceResult fit_convergence(std::vector<double> spacings, std::vector<double> errors) {
  if (spacings.size() != errors.size() || spacings.size() < 3) {
    throw std::invalid_argument("convergence fit needs at least 3 (h, error) pairs");
  }
  ConvergenceResult out;
  out.spacings = std::move(spacings);
  out.errors = std::move(errors);
  for (double e : out.errors) {
    if (e < kSaturationFloor) out.saturated = true;
  }
  if (out.saturated) return out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(out.errors.size());
  for (std::size_t i = 0; i < out.errors.size(); ++i) {
    const double x = std::log(out.spacings[i]);
    const double y = std::log(out.errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

inline ConvergenceResult convergence_study(CaseId id, double gamma_tilde, unsigned n,
                                           std::span<const Grid> grids) {
  if (grids.size() < 3) throw std::invalid_argument("convergence study needs at least 3 grids");
  const double exact = energy_level(id, n, gamma_tilde);
  const MassProfile mass(gamma_tilde);
  const auto dual = build_dual(CaseSpec::preset(id, gamma_tilde), mass, PotentialProfile(gamma_tilde));
  std::vector<double> spacings, errors;
  for (const Grid& g : grids) {
    const auto values = lowest_eigenvalues(discretize_dual(dual, g), n + 1);
    spacings.push_back(g.spacing());
    errors.push_back(std::abs(values[n] - exact));
  }
  return fit_convergence(std::move(spacings), std::move(errors));
}

}  // namespace pdm
