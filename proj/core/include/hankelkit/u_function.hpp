/**
 * @file u_function.hpp
 * @brief Candidate members of the class U, parametrized by a_2 and the
 * Taylor coefficients of a Schwarz-type function omega.
 *
 * A candidate is f with z/f(z) = 1 - a_2 z - z omega(z), where
 * omega(z) = c_1 z + c_2 z^2 + ... + c_K z^K is a polynomial truncation.
 */
#ifndef HANKELKIT_U_FUNCTION_HPP
#define HANKELKIT_U_FUNCTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hankelkit/series.hpp"

namespace hankelkit::series {

/// Raised when (a_2, c) violates the necessary coefficient bounds.
class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Absolute slack applied when checking the coefficient-region bounds, so
/// that points computed on the boundary of the region are accepted.
inline constexpr double kSpecBoundTol = 1e-12;

/// Minimum number of Schwarz coefficients a spec must carry.
inline constexpr std::size_t kMinSchwarzCoefficients = 4;

class UFunctionSpec {
public:
  /// Validates the necessary bounds
  ///   |c1| <= 1, |c2| <= (1-|c1|^2)/2,
  ///   |c3| <= (1 - |c1|^2 - 4|c2|^2/(1+|c1|))/3,
  ///   |c4| <= (1 - |c1|^2 - 4|c2|^2)/4,   |a2| <= 2
  /// and throws SpecError on violation. Shorter c vectors are zero-padded
  /// to four entries.
  UFunctionSpec(Complex a2, std::vector<Complex> c);

  Complex a2() const noexcept { return a2_; }
  std::span<const Complex> c() const noexcept { return c_; }
  /// c_k for k >= 1; zero beyond the stored truncation.
  Complex c(std::size_t k) const noexcept {
    return (k >= 1 && k <= c_.size()) ? c_[k - 1] : Complex{};
  }
  std::size_t truncation() const noexcept { return c_.size(); }

  /// omega(z) as a series of the requested order.
  PowerSeries omega(std::size_t order) const;

  /// z/f(z) = 1 - a2 z - z omega(z) as a series of the requested order.
  PowerSeries z_over_f(std::size_t order) const;

  /// Same spec with every Schwarz coefficient multiplied by s in [0, 1].
  UFunctionSpec scaled(double s) const;

private:
  Complex a2_;
  std::vector<Complex> c_;
};

/// Human-readable reason the bounds fail, or empty when they hold.
std::string coefficient_region_violation(Complex a2,
                                         std::span<const Complex> c);

/// a_1..a_{n_max} from the closed polynomial formulas; n_max <= 6.
/// Returned as the series f = z + a2 z^2 + ... of order n_max.
PowerSeries coeffs_closed_form(const UFunctionSpec& spec, std::size_t n_max);

/// a_1..a_{n_max} by inverting z/f(z) as a truncated series.
PowerSeries coeffs_series_route(const UFunctionSpec& spec, std::size_t n_max);

/// Closed formulas when n_max <= 6, the series route otherwise.
PowerSeries coeffs_from_schwarz(const UFunctionSpec& spec, std::size_t n_max);

struct MembershipResult {
  bool member = false;
  /// max |(z/f)^2 f'(z) - 1| over the sampled circle.
  double max_deviation = 0.0;
  /// 1 - max_deviation.
  double margin = 0.0;
  std::string diagnostic;
};

inline constexpr double kDefaultMembershipRadius = 0.999;
inline constexpr std::size_t kDefaultMembershipSamples = 4096;

/// Numerical surrogate for |(z/f(z))^2 f'(z) - 1| < 1 on the disk: the
/// quantity is analytic, so its maximum over |z| <= radius is attained on
/// the circle, which is sampled at `samples` equispaced points. f must
/// also be analytic there, i.e. z/f(z) must not vanish inside the circle;
/// this is checked through the winding number of z/f on the samples.
MembershipResult u_membership_check(
    const UFunctionSpec& spec, double radius = kDefaultMembershipRadius,
    std::size_t samples = kDefaultMembershipSamples);

} // namespace hankelkit::series

#endif // HANKELKIT_U_FUNCTION_HPP
