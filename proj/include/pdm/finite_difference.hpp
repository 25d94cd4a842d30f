// Centered finite-difference stencils on uniform samples.
#pragma once

#include <cstddef>
#include <span>

namespace pdm::fd {

enum class Order { Second = 2, Fourth = 4 };

constexpr std::size_t radius(Order order) { return order == Order::Second ? 1 : 2; }

template <class T>
T first(std::span<const T> f, std::size_t i, double h, Order order) {
  if (order == Order::Second) return (f[i + 1] - f[i - 1]) / (2.0 * h);
  return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}

template <class T>
T second(std::span<const T> f, std::size_t i, double h, Order order) {
  if (order == Order::Second) return (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
  return (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) /
         (12.0 * h * h);
}

}  // namespace pdm::fd
