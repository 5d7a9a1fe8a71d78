/**
 * @file optimizer.hpp
 * @brief Certified global maximization over a box with side constraints,
 * and two interval-free lower-bound witnesses (grid, multistart ascent).
 */
#ifndef HANKELKIT_OPTIMIZER_HPP
#define HANKELKIT_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hankelkit/box_region.hpp"
#include "hankelkit/interval.hpp"
#include "hankelkit/objectives.hpp"

namespace hankelkit::opt {

using objectives::ObjectiveSpec;

inline constexpr double kDefaultTol = 1e-7;
inline constexpr std::size_t kDefaultBudget = 10'000'000;
/// Incumbent points satisfy every constraint to within this amount.
inline constexpr double kFeasibilityTol = 1e-12;

enum class Status { converged, budget_exhausted };

std::string to_string(Status s);

struct OptimizationResult {
  /// Certified: no feasible point has a value above this.
  double upper_bound = 0.0;
  std::vector<double> incumbent_point;
  double incumbent_value = 0.0;
  double gap = 0.0;
  std::size_t nodes_processed = 0;
  Status status = Status::converged;
};

enum class EnclosureMode {
  /// Natural interval extension only.
  natural,
  /// Natural extension intersected with the mean-value form
  /// f(m) + sum_i G_i (X_i - m_i), G the interval gradient.
  mean_value,
};

/// Enclosure of the objective's range over `cell`. Empty when the cell is
/// certified infeasible (a constraint enclosure lies above 0, or a radicand
/// is negative throughout).
Interval interval_eval(const ObjectiveSpec& objective,
                       std::span<const Interval> cell,
                       EnclosureMode mode = EnclosureMode::mean_value);

/// Best-first interval branch-and-bound. Cells are ordered by enclosure
/// upper bound (ties: older first) and bisected along their widest side.
/// A cell is dropped when it is certified infeasible or its upper bound is
/// at most incumbent + tol; the largest dropped upper bound is kept, so the
/// reported upper bound stays valid. Stops when upper bound - incumbent
/// <= tol or after `budget` nodes.
OptimizationResult maximize(const ObjectiveSpec& objective,
                            double tol = kDefaultTol,
                            std::size_t budget = kDefaultBudget);

struct PointValue {
  std::vector<double> point;
  double value = 0.0;
};

class NoFeasiblePoint : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluates every feasible point of a uniform grid with `resolution`
/// points per variable over the bounding box; returns the best (first in
/// lexicographic order on ties).
PointValue grid_oracle(const ObjectiveSpec& objective, std::size_t resolution);

/// Projected ascent from `starts` seeded random feasible points.
PointValue multistart_local(const ObjectiveSpec& objective, std::size_t starts,
                            std::uint64_t seed);

/// Ascent from one feasible start: finite-difference gradient steps plus
/// coordinate steps, each candidate pulled back into the domain, with the
/// step halved whenever no candidate improves.
PointValue local_ascent(const ObjectiveSpec& objective,
                        std::vector<double> start);

/// Clamps into the bounding box, then bisects along the segment towards the
/// objective's interior point until all constraints hold.
std::vector<double> project_to_domain(const ObjectiveSpec& objective,
                                      std::span<const double> x);

} // namespace hankelkit::opt

#endif // HANKELKIT_OPTIMIZER_HPP
