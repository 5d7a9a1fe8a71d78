#include "hankelkit/box_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hankelkit::opt {

BoxRegion::BoxRegion(std::vector<Interval> bounds,
                     std::vector<Constraint> constraints)
    : bounds_(std::move(bounds)), constraints_(std::move(constraints)) {
  for (const auto& b : bounds_) {
    if (b.is_empty() || !b.is_finite()) {
      throw std::invalid_argument("BoxRegion: bounds must be finite and non-empty");
    }
  }
}

double BoxRegion::violation(std::span<const double> x) const {
  if (x.size() != bounds_.size()) {
    throw std::invalid_argument("BoxRegion: dimension mismatch");
  }
  double v = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i])) return std::numeric_limits<double>::infinity();
    v = std::max({v, bounds_[i].lo() - x[i], x[i] - bounds_[i].hi()});
  }
  for (const auto& c : constraints_) v = std::max(v, c.point(x));
  return v;
}

CellStatus BoxRegion::classify(std::span<const Interval> cell) const {
  bool all_satisfied = true;
  for (const auto& c : constraints_) {
    const Interval g = c.enclosure(cell);
    if (g.is_empty() || g.lo() > 0.0) return CellStatus::infeasible;
    if (g.hi() > 0.0) all_satisfied = false;
  }
  return all_satisfied ? CellStatus::feasible : CellStatus::undecided;
}

} // namespace hankelkit::opt
