// Composite Simpson on uniform grids (trapezoid when the point count is even).
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pdm/core_model.hpp"

namespace pdm {

template <class T>
T integrate_uniform(std::span<const T> values, double h) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("quadrature needs at least 3 points");
  T sum{};
  if (n % 2 == 1) {
    T odd{};
    T even{};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i % 2 == 1) odd += values[i];
      else even += values[i];
    }
    sum = (values.front() + values.back() + 4.0 * odd + 2.0 * even) * (h / 3.0);
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) sum += values[i];
    sum = (sum + 0.5 * (values.front() + values.back())) * h;
  }
  return sum;
}

/// Integral of values(y) * weight(y) over the grid; weight defaults to 1.
inline double quadrature(std::span<const double> values, const Grid& grid,
                         const std::function<double(double)>& weight = {}) {
  if (values.size() != grid.n_points) throw std::invalid_argument("sample count does not match grid");
  if (!weight) return integrate_uniform(values, grid.spacing());
  std::vector<double> weighted(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) weighted[i] = values[i] * weight(grid.node(i));
  return integrate_uniform<double>(weighted, grid.spacing());
}

/// <a, b>_w = integral of w conj(a) b.
inline std::complex<double> inner_product(std::span<const std::complex<double>> a,
                                          std::span<const std::complex<double>> b,
                                          const Grid& grid,
                                          const std::function<double(double)>& weight = {}) {
  if (a.size() != grid.n_points || b.size() != grid.n_points) {
    throw std::invalid_argument("sample count does not match grid");
  }
  std::vector<std::complex<double>> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = weight ? weight(grid.node(i)) : 1.0;
    prod[i] = w * std::conj(a[i]) * b[i];
  }
  return integrate_uniform<std::complex<double>>(prod, grid.spacing());
}

}  // namespace pdm
