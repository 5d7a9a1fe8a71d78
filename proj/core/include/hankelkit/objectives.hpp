/**
 * @file objectives.hpp
 * @brief The closed-form bound functions with their constraint domains,
 * and a registry that looks them up by name.
 *
 * Free functions (h1, psi, ...) check their domain and throw DomainError
 * outside it. Registry entries bundle the same kernels with point,
 * interval and interval-gradient evaluators for the optimizer.
 */
#ifndef HANKELKIT_OBJECTIVES_HPP
#define HANKELKIT_OBJECTIVES_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankelkit/box_region.hpp"
#include "hankelkit/dual.hpp"
#include "hankelkit/interval.hpp"
#include "hankelkit/objective_kernels.hpp"

namespace hankelkit::objectives {

using opt::BoxRegion;
using opt::Interval;

/// Registry objectives have at most this many variables.
inline constexpr std::size_t kMaxArity = 3;
using IntervalDual = opt::Dual<Interval, kMaxArity>;

/// Slack allowed when checking that a point lies in a domain.
inline constexpr double kDomainTol = 1e-12;

class UnknownObjective : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ObjectiveSpec {
  std::string name;
  std::vector<std::string> variables;
  /// Checked point evaluation: DomainError outside the domain.
  std::function<double(std::span<const double>)> eval;
  /// Point evaluation without the domain check (radicands still clamped).
  std::function<double(std::span<const double>)> eval_unchecked;
  /// Natural interval extension; empty when a radicand is negative.
  std::function<Interval(std::span<const Interval>)> enclose;
  /// Value and gradient enclosures over a cell.
  std::function<IntervalDual(std::span<const IntervalDual>)> enclose_gradient;
  BoxRegion domain;
  /// A feasible point well inside the domain.
  std::vector<double> interior_point;
  std::string citation;
  /// Maximum over the domain as printed in the source, when one is given,
  /// and the unit in the last printed digit.
  std::optional<double> published_maximum;
  double published_resolution = 0.0;

  std::size_t arity() const noexcept { return variables.size(); }
};

/// Throws DomainError unless x lies in `domain` within kDomainTol.
void check_domain(const std::string& name, const BoxRegion& domain,
                  std::span<const double> x);

struct ObjectiveInfo {
  std::string name;
  std::vector<std::string> variables;
  std::string citation;
  std::optional<double> published_maximum = std::nullopt;
  double published_resolution = 0.0;
};

/// Bundles a generic kernel `k(span<const T>) -> T` into an ObjectiveSpec.
template <typename Kernel>
ObjectiveSpec make_objective(ObjectiveInfo info, Kernel k, BoxRegion domain,
                             std::vector<double> interior_point) {
  ObjectiveSpec spec;
  spec.name = info.name;
  spec.variables = std::move(info.variables);
  spec.citation = std::move(info.citation);
  spec.published_maximum = info.published_maximum;
  spec.published_resolution = info.published_resolution;
  spec.domain = std::move(domain);
  spec.interior_point = std::move(interior_point);
  spec.eval_unchecked = [k](std::span<const double> x) { return k(x); };
  spec.eval = [k, name = info.name,
               dom = spec.domain](std::span<const double> x) {
    check_domain(name, dom, x);
    return k(x);
  };
  spec.enclose = [k](std::span<const Interval> x) { return k(x); };
  spec.enclose_gradient = [k](std::span<const IntervalDual> x) {
    return k(x);
  };
  return spec;
}

/// All registered objectives: h1, phi1, psi, h2, g1, g2, psi1, psi2, hstar.
const std::vector<ObjectiveSpec>& registry();

/// nullptr when the name is unknown.
const ObjectiveSpec* find_objective(std::string_view name);

/// Throws UnknownObjective when the name is unknown.
const ObjectiveSpec& objective(std::string_view name);

std::vector<std::string> objective_names();

// Domains -------------------------------------------------------------------

BoxRegion unit_interval_domain();
/// {(x, y): 0 <= x <= 1, 0 <= y <= (1 - x^2)/2}
BoxRegion psi_domain();
BoxRegion phi1_domain();
/// (c2, c1) with 0 <= c1 <= 1, 0 <= c2 <= (1 - c1^2)/2.
BoxRegion h2_domain();
/// {(y, z): 0 <= y <= 1/sqrt3, 0 <= z <= sqrt(1 - 3y^2)/sqrt5}
BoxRegion psi1_domain();
BoxRegion psi2_domain();
/// 0 <= y <= 1/sqrt3.
BoxRegion psi1_majorant_domain();

// Checked point evaluators ----------------------------------------------------

double h1(double t);
double h1_d1(double t);

double phi1(double x, double y, double z);

double psi(double x, double y);
double psi_dx(double x, double y);
double psi_dy(double x, double y);

/// Coefficients of h2 as a quadratic in c2^2.
double h2_A(double c1);
double h2_B(double c1);
double h2_C(double c1);
double h2(double c2, double c1);

double g1(double t);
double g2(double t);
double g2_d1(double t);
double g2_d2(double t);
double g2_d3(double t);

double psi1(double y, double z);
/// 4/5 + (4/sqrt7) y - (12/5) y^2 + 6 y^3, which dominates psi1 on its domain.
double psi1_majorant(double y);
/// psi1_majorant(1/sqrt3) = 4/sqrt21 + 2/sqrt3.
double psi1_relaxed_bound();

double psi2(double x, double y, double z);
double hstar(double x);

// Unregistered one-dimensional helpers used when reproducing the proofs.

/// psi along y = (1 - x^2)/2, x in [0, 1].
ObjectiveSpec psi_curved_edge_objective();
/// psi along y = 0, x in [0, 1].
ObjectiveSpec psi_axis_edge_objective();
/// psi1_majorant on [0, 1/sqrt3].
ObjectiveSpec psi1_majorant_objective();

} // namespace hankelkit::objectives

#endif // HANKELKIT_OBJECTIVES_HPP
