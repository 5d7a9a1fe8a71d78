/**
 * @file grunsky.hpp
 * @brief Odd Grunsky coefficients of the square-root transform of a
 * normalized function, and the identities tying them to a_2..a_5.
 *
 * For f = z + a_2 z^2 + ..., let F(z) = sqrt(f(z^2)) = z + b_3 z^3 + ...
 * and expand
 *
 *     log[(F(t) - F(z)) / (t - z)] = sum_{p,q >= 0} w_{p,q} t^p z^q.
 *
 * F is odd, so only pairs with p + q even occur. The table keeps the
 * odd-odd pairs w_{2p-1,2q-1} up to a cutoff.
 */
#ifndef HANKELKIT_GRUNSKY_HPP
#define HANKELKIT_GRUNSKY_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hankelkit/series.hpp"

namespace hankelkit::series {

class GrunskyTable {
public:
  /// Zero table holding all odd pairs with indices <= cutoff.
  /// cutoff must be odd and >= 1.
  explicit GrunskyTable(std::size_t cutoff);

  std::size_t cutoff() const noexcept { return cutoff_; }

  /// w_{p,q}; p and q odd and <= cutoff, otherwise SeriesError.
  Complex operator()(std::size_t p, std::size_t q) const;

  /// Stores w_{p,q} only (no symmetric write).
  void set_entry(std::size_t p, std::size_t q, Complex value);
  /// Stores w_{p,q} and w_{q,p}.
  void set_symmetric(std::size_t p, std::size_t q, Complex value);

  /// max |w_{p,q} - w_{q,p}| over stored pairs.
  double symmetry_defect() const noexcept;

  /// |w11|^2 + 3|w13|^2 + 5|w15|^2 + 7|w17|^2, truncated at the cutoff.
  double weighted_first_row_sum() const;

private:
  std::size_t slot(std::size_t p, std::size_t q) const;

  std::size_t cutoff_;
  std::size_t side_;
  std::vector<Complex> values_;
};

/// Builds the odd Grunsky table of sqrt(f(z^2)).
///
/// (F(t) - F(z))/(t - z) = sum_i t^i h_i(z) with h_i(z) = sum_m b_{i+m+1} z^m,
/// and the bivariate logarithm L = sum_i t^i L_i(z) follows from
/// D dL/dt = dD/dt:
///
///     L_0 = log h_0,   i L_i = (i h_i - sum_{k=1}^{i-1} k L_k h_{i-k}) / h_0.
///
/// Requires f normalized (f[0] = 0, f[1] = 1) with f.order() >= 2*cutoff + 2.
GrunskyTable grunsky_table(const PowerSeries& f, std::size_t cutoff);

/// Coefficients b_1, b_2, ... of sqrt(f(z^2)) up to z^order.
PowerSeries square_root_transform(const PowerSeries& f, std::size_t order);

/// Residuals of
///   a2 = 2 w11,
///   a3 = 2 w13 + 3 w11^2,
///   a4 = 2 w33 + 8 w11 w13 + (10/3) w11^3,
///   a5 = 2 w35 + 8 w11 w33 + 5 w13^2 + 18 w11^2 w13 + (7/3) w11^4,
///   0  = 3 w15 - 3 w11 w13 + w11^3 - 3 w33,
///   0  = w17 - w35 - w11 w33 - w13^2 + w11^4 / 3,
/// each written as (right side) - (left side). The table must reach index 7
/// and `a` must cover a_2..a_5.
std::array<Complex, 6> verify_grunsky_identities(const GrunskyTable& table,
                                                 const PowerSeries& a);

struct GrunskyFunctional {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of
///   sum_q (2q-1) |sum_p w_{2p-1,2q-1} x_{2p-1}|^2 <= sum_p |x_{2p-1}|^2/(2p-1)
/// truncated at the table cutoff. x[j] holds x_{2j+1}; missing entries are 0.
GrunskyFunctional grunsky_functional(const GrunskyTable& table,
                                     std::span<const Complex> x);

} // namespace hankelkit::series

#endif // HANKELKIT_GRUNSKY_HPP
