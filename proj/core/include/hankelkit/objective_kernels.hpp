/**
 * @file objective_kernels.hpp
 * @brief The bound functions, written once over a generic scalar type.
 *
 * Each kernel is instantiated with double (point evaluation), Interval
 * (natural interval extension), Dual<Interval, N> (interval gradients for
 * the mean-value form) and, for the purely polynomial ones, exact rational
 * types in the tests. Kernels do not check domains; see objectives.hpp.
 *
 * Constants are formed from integers in the scalar type itself (T(4) /
 * sqrt(T(7)) rather than a decimal literal), so that interval instances
 * enclose the exact constant.
 */
#ifndef HANKELKIT_OBJECTIVE_KERNELS_HPP
#define HANKELKIT_OBJECTIVE_KERNELS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "hankelkit/dual.hpp"
#include "hankelkit/interval.hpp"

namespace hankelkit::objectives {

/// Evaluation outside an objective's stated domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Square-root arguments in [-kRadicandClamp, 0) are treated as 0.
inline constexpr double kRadicandClamp = 1e-14;

namespace kernels {

template <typename T>
T ipow(const T& x, int n) {
  T r = x;
  for (int i = 1; i < n; ++i) r = r * x;
  return r;
}

inline opt::Interval ipow(const opt::Interval& x, int n) {
  return opt::pow(x, n);
}

template <std::size_t N>
opt::Dual<opt::Interval, N> ipow(const opt::Dual<opt::Interval, N>& x, int n) {
  return opt::pow(x, n);
}

inline double root(double r) {
  if (r < 0.0) {
    if (r < -kRadicandClamp) {
      throw DomainError("negative radicand " + std::to_string(r));
    }
    r = 0.0;
  }
  return std::sqrt(r);
}

inline opt::Interval root(const opt::Interval& r) { return opt::sqrt(r); }

template <std::size_t N>
opt::Dual<opt::Interval, N> root(const opt::Dual<opt::Interval, N>& r) {
  return opt::sqrt(r);
}

// ---------------------------------------------------------------------------
// a_2 = 0 bound for |H_2(3)| on U.

template <typename T>
T h1(const T& t) {
  return (T(3) - T(2) * ipow(t, 2) + T(12) * ipow(t, 3) - ipow(t, 4)) / T(12);
}

template <typename T>
T h1_d1(const T& t) {
  return -(t * (T(1) - T(9) * t + ipow(t, 2))) / T(3);
}

// ---------------------------------------------------------------------------
// General |H_2(3)| on U.

template <typename T>
T phi1(const T& x, const T& y, const T& z) {
  return T(3) * z + T(4) * x * y + ipow(x, 3) + ipow(y, 2);
}

template <typename T>
T psi(const T& x, const T& y) {
  return T(1) + x - T(2) * ipow(x, 2) + ipow(x, 4) + T(4) * x * y -
         T(3) * ipow(y, 2);
}

template <typename T>
T psi_dx(const T& x, const T& y) {
  return T(1) - T(4) * x + T(4) * ipow(x, 3) + T(4) * y;
}

template <typename T>
T psi_dy(const T& x, const T& y) {
  return T(4) * x - T(6) * y;
}

/// psi_x along the line x = 3y/2 where psi_y vanishes.
template <typename T>
T psi_reduced_gradient(const T& y) {
  return T(1) - T(2) * y + T(27) / T(2) * ipow(y, 3);
}

/// psi on the curved edge y = (1 - x^2)/2.
template <typename T>
T psi_curved_edge(const T& x) {
  return psi(x, (T(1) - ipow(x, 2)) / T(2));
}

/// psi on the edge y = 0.
template <typename T>
T psi_axis_edge(const T& x) {
  return psi(x, T(0));
}

// ---------------------------------------------------------------------------
// |H_2(4)| on U with a_2 = 0, as a quadratic in |c_2|^2.

template <typename T>
T h2_A(const T& c1) {
  return T(16) / (T(9) * ipow(T(1) + c1, 2));
}

template <typename T>
T h2_B(const T& c1) {
  return T(2) * c1 - (T(1) - ipow(c1, 2)) / T(2) -
         T(8) / T(9) * (T(1) - c1) - T(8) / T(3) * ipow(c1, 2) / (T(1) + c1);
}

template <typename T>
T h2_C(const T& c1) {
  const T u = T(1) - ipow(c1, 2);
  return T(17) / T(72) * ipow(u, 2) + T(2) / T(3) * ipow(c1, 2) * u +
         ipow(c1, 4);
}

template <typename T>
T h2(const T& c2, const T& c1) {
  return h2_A(c1) * ipow(c2, 4) + h2_B(c1) * ipow(c2, 2) + h2_C(c1);
}

template <typename T>
T g1(const T& t) {
  return (T(41) * ipow(t, 4) + T(14) * ipow(t, 2) + T(17)) / T(72);
}

template <typename T>
T g2(const T& t) {
  return (T(17) * ipow(t, 6) - T(12) * ipow(t, 5) + T(38) * ipow(t, 4) -
          T(24) * ipow(t, 3) + T(17) * ipow(t, 2) + T(36) * t) /
         T(72);
}

template <typename T>
T g2_d1(const T& t) {
  return (T(102) * ipow(t, 5) - T(60) * ipow(t, 4) + T(152) * ipow(t, 3) -
          T(72) * ipow(t, 2) + T(34) * t + T(36)) /
         T(72);
}

template <typename T>
T g2_d2(const T& t) {
  return (T(510) * ipow(t, 4) - T(240) * ipow(t, 3) + T(456) * ipow(t, 2) -
          T(144) * t + T(34)) /
         T(72);
}

template <typename T>
T g2_d3(const T& t) {
  return (T(2040) * ipow(t, 3) - T(720) * ipow(t, 2) + T(912) * t - T(144)) /
         T(72);
}

/// g2(t)/t, a polynomial of degree 5.
template <typename T>
T g2_over_t(const T& t) {
  return (T(17) * ipow(t, 5) - T(12) * ipow(t, 4) + T(38) * ipow(t, 3) -
          T(24) * ipow(t, 2) + T(17) * t + T(36)) /
         T(72);
}

template <typename T>
T g2_over_t_d1(const T& t) {
  return (T(85) * ipow(t, 4) - T(48) * ipow(t, 3) + T(114) * ipow(t, 2) -
          T(48) * t + T(17)) /
         T(72);
}

template <typename T>
T g2_over_t_d2(const T& t) {
  return (T(340) * ipow(t, 3) - T(144) * ipow(t, 2) + T(228) * t - T(48)) /
         T(72);
}

template <typename T>
T g2_over_t_d3(const T& t) {
  return (T(1020) * ipow(t, 2) - T(288) * t + T(228)) / T(72);
}

// ---------------------------------------------------------------------------
// |H_2(3)| on S through the odd Grunsky coefficients.

template <typename T>
T psi1(const T& y, const T& z) {
  using std::sqrt;
  const T radicand = T(1) - T(3) * ipow(y, 2) - T(5) * ipow(z, 2);
  return T(4) / sqrt(T(7)) * y * root(radicand) + T(6) * ipow(y, 3) +
         T(4) * ipow(z, 2);
}

/// psi1 with the square root bounded by 1 and z eliminated through
/// 5 z^2 <= 1 - 3 y^2.
template <typename T>
T psi1_majorant(const T& y) {
  using std::sqrt;
  return T(4) / T(5) + T(4) / sqrt(T(7)) * y - T(12) / T(5) * ipow(y, 2) +
         T(6) * ipow(y, 3);
}

template <typename T>
T psi2(const T& x, const T& y, const T& z) {
  using std::sqrt;
  const T radicand =
      T(1) - ipow(x, 2) - T(3) * ipow(y, 2) - T(5) * ipow(z, 2);
  return T(6) / sqrt(T(7)) * root(radicand) + T(12) * x * y * z +
         T(3) * ipow(x, 2) * ipow(y, 2) + T(6) * ipow(y, 3) +
         T(2) * ipow(x, 4) * y + T(2) * ipow(x, 3) * z + ipow(x, 6) +
         T(4) * ipow(z, 2);
}

template <typename T>
T hstar(const T& x) {
  using std::sqrt;
  const T u = T(1) - ipow(x, 2);
  const T s = root(u);
  return T(6) / sqrt(T(7)) * s + T(12) / sqrt(T(15)) * x * u +
         T(3) / T(15) * ipow(u, 2) + T(6) / (T(3) * sqrt(T(3))) * u * s +
         T(2) / sqrt(T(3)) * ipow(x, 4) * s +
         T(2) / sqrt(T(5)) * ipow(x, 3) * s + ipow(x, 6) +
         T(4) / T(5) * ipow(u, 2);
}

} // namespace kernels
} // namespace hankelkit::objectives

#endif // HANKELKIT_OBJECTIVE_KERNELS_HPP
