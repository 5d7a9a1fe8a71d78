/**
 * @file hankel.hpp
 * @brief Second Hankel determinants, sharp-example fixtures, and the
 * recomputation of each bound from its objective function.
 */
#ifndef HANKELKIT_HANKEL_HPP
#define HANKELKIT_HANKEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankelkit/grunsky.hpp"
#include "hankelkit/optimizer.hpp"
#include "hankelkit/series.hpp"
#include "hankelkit/u_function.hpp"

namespace hankelkit::hankel {

using series::Complex;
using series::PowerSeries;

/// a_n a_{n+2} - a_{n+1}^2 for f = z + a_2 z^2 + ...; needs n >= 1 and
/// f.order() >= n + 2.
Complex hankel2(const PowerSeries& f, std::size_t n);

/// H_2(3) through the odd Grunsky coefficients:
///   2(2w13 + 3w11^2) w17 - 12 w11 w13 w15 - 3 w11^2 w13^2 + 6 w13^3
///   - 2 w11^4 w13 + 2 w11^3 w15 - w11^6 - 4 w15^2.
Complex hankel2_grunsky(const series::GrunskyTable& table);

// Fixtures -----------------------------------------------------------------

inline constexpr std::size_t kFixtureOrder = 24;

struct Fixture {
  std::string name;
  std::string formula;
  /// Exact Taylor coefficients through z^kFixtureOrder.
  PowerSeries f;
  /// The (a_2, omega) parametrization when the function lies in U.
  std::optional<series::UFunctionSpec> u_spec;
  /// Expected H_2(n) for every n with n + 2 <= kFixtureOrder.
  Complex (*expected_hankel)(std::size_t n);
};

/// identity (z), halfplane (z/(1-z)), odd-koebe (z/(1-z^2)), koebe
/// (z/(1-z)^2).
const std::vector<Fixture>& sharp_examples();

/// nullptr when unknown.
const Fixture* find_fixture(std::string_view name);

// Theorem reproduction -------------------------------------------------------

struct HankelReport {
  std::string id;
  std::string statement;
  double paper_bound = 0.0;
  /// Unit in the last digit the source prints for paper_bound (0: exact).
  double paper_resolution = 0.0;
  /// Largest value found (attained at argmax).
  double recomputed_bound = 0.0;
  /// Certified upper bound from branch-and-bound.
  double certified_upper_bound = 0.0;
  std::vector<double> argmax;
  std::string argmax_description;
  /// Agreement threshold: optimizer tolerance + paper_resolution.
  double tolerance = 0.0;
  bool agreed = false;
  /// The published figure is known not to reproduce and is reported for
  /// comparison rather than treated as a target.
  bool discrepancy_protocol = false;
  opt::Status status = opt::Status::converged;
  std::vector<std::string> notes;
};

struct EdgeMaximum {
  std::string edge;
  double value = 0.0;
  std::vector<double> argmax;
};

/// Maxima of psi on the four edges of {0 <= x <= 1, 0 <= y <= (1-x^2)/2}.
std::vector<EdgeMaximum> psi_boundary_maxima(double tol, std::size_t budget);

/// One report per bound: 1a, 1b, 2, 3a, 3b.
std::vector<HankelReport> reproduce_theorems(
    double tol = opt::kDefaultTol, std::size_t budget = opt::kDefaultBudget);

} // namespace hankelkit::hankel

#endif // HANKELKIT_HANKEL_HPP
