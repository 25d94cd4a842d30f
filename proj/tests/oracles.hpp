// Reference implementations used only by the tests. They share no code with
// the library beyond the mass profile and grid.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pdm/core_model.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(Matrix a, int sweeps = 100) {
  const std::size_t n = a.size();
  for (int s = 0; s < sweeps; ++s) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Unexpanded von Roos kinetic operator
///   T = -(1/4) [ m^a (m^b (m^c u)')' + m^c (m^b (m^a u)')' ]
/// by nested staggered differences, O(h^2).
inline std::vector<std::complex<double>> von_roos_direct(double a, double b, double c,
                                                         const pdm::MassProfile& mass,
                                                         const std::vector<std::complex<double>>& u,
                                                         const pdm::Grid& grid) {
  const double h = grid.spacing();
  const std::size_t n = u.size();
  auto nested = [&](double outer, double inner) {
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double y = grid.node(i);
      const double yl = y - 0.5 * h;
      const double yr = y + 0.5 * h;
      auto f = [&](std::size_t k) { return std::pow(mass.m(grid.node(k)), inner) * u[k]; };
      const auto flux_r = std::pow(mass.m(yr), b) * (f(i + 1) - f(i)) / h;
      const auto flux_l = std::pow(mass.m(yl), b) * (f(i) - f(i - 1)) / h;
      out[i] = std::pow(mass.m(y), outer) * (flux_r - flux_l) / h;
    }
    return out;
  };
  const auto t1 = nested(a, c);
  const auto t2 = nested(c, a);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = -0.25 * (t1[i] + t2[i]);
  return out;
}

/// Hermite polynomials from their explicit coefficients, n <= 6.
inline double hermite_explicit(unsigned n, double z) {
  const double z2 = z * z;
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * z;
    case 2: return 4.0 * z2 - 2.0;
    case 3: return 8.0 * z2 * z - 12.0 * z;
    case 4: return 16.0 * z2 * z2 - 48.0 * z2 + 12.0;
    case 5: return 32.0 * z2 * z2 * z - 160.0 * z2 * z + 120.0 * z;
    case 6: return 64.0 * z2 * z2 * z2 - 480.0 * z2 * z2 + 720.0 * z2 - 120.0;
    default: return std::nan("");
  }
}

}  // namespace oracle
