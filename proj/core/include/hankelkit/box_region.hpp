/**
 * @file box_region.hpp
 * @brief Axis-aligned boxes with inequality side constraints g(x) <= 0.
 */
#ifndef HANKELKIT_BOX_REGION_HPP
#define HANKELKIT_BOX_REGION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hankelkit/interval.hpp"

namespace hankelkit::opt {

/// A cell of the search space: one interval per variable.
using Cell = std::vector<Interval>;

/// g(x) <= 0, with a point evaluator and an interval extension.
struct Constraint {
  std::string description;
  std::function<double(std::span<const double>)> point;
  std::function<Interval(std::span<const Interval>)> enclosure;
};

/// Builds a Constraint from a generic callable taking a span of scalars.
template <typename F>
Constraint make_constraint(std::string description, F g) {
  return Constraint{
      std::move(description),
      [g](std::span<const double> x) { return g(x); },
      [g](std::span<const Interval> x) { return g(x); },
  };
}

enum class CellStatus { infeasible, feasible, undecided };

class BoxRegion {
public:
  BoxRegion() = default;
  BoxRegion(std::vector<Interval> bounds, std::vector<Constraint> constraints);

  std::size_t dimension() const noexcept { return bounds_.size(); }
  const std::vector<Interval>& bounds() const noexcept { return bounds_; }
  const std::vector<Constraint>& constraints() const noexcept {
    return constraints_;
  }

  /// Largest amount by which x leaves the box or violates a constraint;
  /// zero or negative means feasible.
  double violation(std::span<const double> x) const;

  bool contains(std::span<const double> x, double tol = 0.0) const {
    return violation(x) <= tol;
  }

  /// infeasible: some constraint's enclosure lies strictly above 0.
  /// feasible: every constraint's enclosure lies at or below 0.
  CellStatus classify(std::span<const Interval> cell) const;

  /// The bounding box as a cell.
  Cell root_cell() const { return bounds_; }

private:
  std::vector<Interval> bounds_;
  std::vector<Constraint> constraints_;
};

} // namespace hankelkit::opt

#endif // HANKELKIT_BOX_REGION_HPP
