/**
 * @file series.hpp
 * @brief Truncated complex power series with fixed-order arithmetic.
 *
 * A PowerSeries of order N stores the coefficients of 1, z, ..., z^N. All
 * binary operations require equal orders and truncate the result at that
 * order, so products and compositions are associative coefficient-wise.
 */
#ifndef HANKELKIT_SERIES_HPP
#define HANKELKIT_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankelkit::series {

using Complex = std::complex<double>;

/// Raised when a series operation's precondition fails (order mismatch,
/// wrong constant term, insufficient order).
class SeriesError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PowerSeries {
public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order);

  /// Takes the coefficients of z^0..z^{n-1}; must be non-empty.
  explicit PowerSeries(std::vector<Complex> coeffs);
  PowerSeries(std::initializer_list<Complex> coeffs);

  static PowerSeries constant(Complex value, std::size_t order);

  /// f(z) = z + a2 z^2 + ... given (a1, a2, ..., a_n). The result has
  /// order n and a zero constant term.
  static PowerSeries from_taylor(std::span<const Complex> a);
  static PowerSeries from_taylor(std::initializer_list<Complex> a);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex operator[](std::size_t k) const { return coeffs_[k]; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }

  /// Coefficient of z^k, or zero beyond the stored order.
  Complex coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Copy truncated or zero-padded to a new order.
  PowerSeries with_order(std::size_t order) const;

  /// Horner evaluation of the stored polynomial.
  Complex evaluate(Complex z) const noexcept;
  /// Derivative of the stored polynomial at z.
  Complex evaluate_derivative(Complex z) const noexcept;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex scalar) noexcept;

  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) {
    return lhs += rhs;
  }
  friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) {
    return lhs -= rhs;
  }
  friend PowerSeries operator*(PowerSeries lhs, Complex s) { return lhs *= s; }
  friend PowerSeries operator*(Complex s, PowerSeries rhs) { return rhs *= s; }

private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to the common order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse; requires a nonzero constant term.
PowerSeries series_recip(const PowerSeries& a);

/// Principal square root with constant term 1; requires a[0] == 1.
PowerSeries series_sqrt(const PowerSeries& a);

/// Logarithm with zero constant term; requires a[0] == 1.
PowerSeries series_log(const PowerSeries& a);

/// Exponential via the recurrence n e_n = sum_{k=1}^{n} k l_k e_{n-k}.
PowerSeries series_exp(const PowerSeries& l);

/// Formal derivative; the result keeps the input order (top coefficient 0).
PowerSeries series_derivative(const PowerSeries& a);

/// a(z^2), truncated to the order of a.
PowerSeries substitute_square(const PowerSeries& a);

/// e^{-i theta} f(e^{i theta} z): the rotation of a normalized function.
PowerSeries rotate(const PowerSeries& f, double theta);

/// Largest coefficient-wise modulus difference; orders must match.
double max_abs_difference(const PowerSeries& a, const PowerSeries& b);

} // namespace hankelkit::series

#endif // HANKELKIT_SERIES_HPP
