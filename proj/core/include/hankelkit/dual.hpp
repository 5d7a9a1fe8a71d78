/**
 * @file dual.hpp
 * @brief Forward-mode first derivatives over an arbitrary scalar type.
 *
 * Instantiated with Interval, a Dual carries an enclosure of the function
 * value together with enclosures of its partial derivatives over a box,
 * which is what the mean-value form needs.
 */
#ifndef HANKELKIT_DUAL_HPP
#define HANKELKIT_DUAL_HPP

#include <array>
#include <cstddef>
#include <type_traits>

namespace hankelkit::opt {

template <typename T, std::size_t N>
struct Dual {
  T value{};
  std::array<T, N> grad{};

  constexpr Dual() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Dual(double c)
    requires(!std::is_same_v<T, double>)
      : value(c) { grad.fill(T(0.0)); }
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Dual(const T& c) : value(c) { grad.fill(T(0.0)); }

  /// Independent variable number `index`.
  static Dual variable(const T& v, std::size_t index) {
    Dual d(v);
    d.grad[index] = T(1.0);
    return d;
  }

  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r;
    r.value = a.value + b.value;
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.grad[i] + b.grad[i];
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r;
    r.value = a.value - b.value;
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.grad[i] - b.grad[i];
    return r;
  }
  friend Dual operator-(const Dual& a) {
    Dual r;
    r.value = -a.value;
    for (std::size_t i = 0; i < N; ++i) r.grad[i] = -a.grad[i];
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r;
    r.value = a.value * b.value;
    for (std::size_t i = 0; i < N; ++i) {
      r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
    }
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r;
    r.value = a.value / b.value;
    const T denom = b.value * b.value;
    for (std::size_t i = 0; i < N; ++i) {
      r.grad[i] = (a.grad[i] * b.value - a.value * b.grad[i]) / denom;
    }
    return r;
  }
};

template <typename T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  Dual<T, N> r;
  r.value = sqrt(a.value);
  const T twice = T(2.0) * r.value;
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = a.grad[i] / twice;
  return r;
}

template <typename T, std::size_t N>
Dual<T, N> pow(const Dual<T, N>& a, int n) {
  using std::pow;
  Dual<T, N> r;
  r.value = pow(a.value, n);
  const T slope = T(static_cast<double>(n)) * pow(a.value, n - 1);
  for (std::size_t i = 0; i < N; ++i) r.grad[i] = slope * a.grad[i];
  return r;
}

} // namespace hankelkit::opt

#endif // HANKELKIT_DUAL_HPP
