#include "hankelkit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "hankelkit/detail/parallel.hpp"
#include "hankelkit/detail/rng.hpp"

namespace hankelkit::opt {

std::string to_string(Status s) {
  switch (s) {
  case Status::converged:
    return "converged";
  case Status::budget_exhausted:
    return "budget_exhausted";
  }
  return "unknown";
}

namespace {

using objectives::IntervalDual;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> midpoint(std::span<const Interval> cell) {
  std::vector<double> m(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) m[i] = cell[i].mid();
  return m;
}

// Evaluates at a feasible point; -inf if the evaluator rejects it.
double safe_value(const ObjectiveSpec& obj, std::span<const double> x) {
  try {
    return obj.eval_unchecked(x);
  } catch (const objectives::DomainError&) {
    return kNegInf;
  }
}

bool feasible(const ObjectiveSpec& obj, std::span<const double> x) {
  return obj.domain.violation(x) <= 0.0;
}

Interval mean_value_form(const ObjectiveSpec& obj,
                         std::span<const Interval> cell) {
  const std::size_t n = cell.size();
  const std::vector<double> m = midpoint(cell);
  std::vector<Interval> mcell(m.begin(), m.end());
  const Interval fm = obj.enclose(mcell);
  if (fm.is_empty()) return Interval::entire();

  std::vector<IntervalDual> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(IntervalDual::variable(cell[i], i));
  }
  const IntervalDual d = obj.enclose_gradient(vars);
  Interval acc = fm;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.grad[i].is_empty() || !d.grad[i].is_finite()) {
      return Interval::entire();
    }
    acc += d.grad[i] * (cell[i] - Interval(m[i]));
  }
  return acc;
}

std::size_t widest_side(std::span<const Interval> cell) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cell.size(); ++i) {
    if (cell[i].width() > cell[best].width()) best = i;
  }
  return best;
}

struct Node {
  Cell cell;
  double upper = 0.0;
  Interval enclosure;
  std::uint64_t id = 0;
};

struct NodeOrder {
  // priority_queue pops the "largest": larger upper bound, then smaller id.
  bool operator()(const Node& a, const Node& b) const noexcept {
    if (a.upper != b.upper) return a.upper < b.upper;
    return a.id > b.id;
  }
};

class BranchAndBound {
public:
  BranchAndBound(const ObjectiveSpec& obj, double tol, std::size_t budget)
      : obj_(obj), tol_(tol), budget_(budget) {}

  OptimizationResult run() {
    seed_incumbent();

    Cell root = obj_.domain.root_cell();
    consider(std::move(root), Interval::entire());

    OptimizationResult out;
    while (true) {
      const double open_upper = queue_.empty() ? kNegInf : queue_.top().upper;
      const double upper = std::max({open_upper, dropped_upper_, best_value_});
      if (upper - best_value_ <= tol_) {
        out.status = Status::converged;
        out.upper_bound = upper;
        break;
      }
      if (queue_.empty()) {
        // Only unsplittable cells remain above the incumbent.
        out.status = Status::budget_exhausted;
        out.upper_bound = upper;
        break;
      }
      if (nodes_ >= budget_) {
        out.status = Status::budget_exhausted;
        out.upper_bound = upper;
        break;
      }
      Node node = queue_.top();
      queue_.pop();
      ++nodes_;
      branch(std::move(node));
    }
    out.incumbent_point = best_point_;
    out.incumbent_value = best_value_;
    out.gap = out.upper_bound - best_value_;
    out.nodes_processed = nodes_;
    return out;
  }

private:
  void seed_incumbent() {
    offer(obj_.interior_point, obj_.eval_unchecked(obj_.interior_point));
    const PointValue local = local_ascent(obj_, obj_.interior_point);
    offer(local.point, local.value);
    const PointValue multi = multistart_local(obj_, 8, 0);
    offer(multi.point, multi.value);
  }

  void offer(std::span<const double> x, double v) {
    if (v > best_value_) {
      best_value_ = v;
      best_point_.assign(x.begin(), x.end());
    }
  }

  void branch(Node node) {
    const std::size_t k = widest_side(node.cell);
    const Interval side = node.cell[k];
    const double mid = side.mid();
    if (!(mid > side.lo() && mid < side.hi())) {
      dropped_upper_ = std::max(dropped_upper_, node.upper);
      return;
    }
    Cell left = node.cell;
    Cell right = std::move(node.cell);
    left[k] = Interval(side.lo(), mid);
    right[k] = Interval(mid, side.hi());
    consider(std::move(left), node.enclosure);
    consider(std::move(right), node.enclosure);
  }

  void consider(Cell cell, const Interval& parent) {
    if (obj_.domain.classify(cell) == CellStatus::infeasible) return;
    // The child's range is inside the parent's, so intersecting keeps the
    // enclosure valid and never wider than the parent's.
    const Interval enc = interval_eval(obj_, cell) & parent;
    if (enc.is_empty()) return;

    std::vector<double> m = midpoint(cell);
    if (!feasible(obj_, m)) m = project_to_domain(obj_, m);
    if (feasible(obj_, m)) {
      const double v = safe_value(obj_, m);
      if (v > best_value_) {
        offer(m, v);
        if (polish_runs_ < kMaxPolishRuns) {
          ++polish_runs_;
          const PointValue p = local_ascent(obj_, best_point_);
          offer(p.point, p.value);
        }
      }
    }

    if (enc.hi() <= best_value_ + tol_) {
      dropped_upper_ = std::max(dropped_upper_, enc.hi());
      return;
    }
    queue_.push(Node{std::move(cell), enc.hi(), enc, next_id_++});
  }

  static constexpr std::size_t kMaxPolishRuns = 64;

  const ObjectiveSpec& obj_;
  double tol_;
  std::size_t budget_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue_;
  std::uint64_t next_id_ = 0;
  std::size_t nodes_ = 0;
  std::size_t polish_runs_ = 0;
  double dropped_upper_ = kNegInf;
  double best_value_ = kNegInf;
  std::vector<double> best_point_;
};

} // namespace

Interval interval_eval(const ObjectiveSpec& objective,
                       std::span<const Interval> cell, EnclosureMode mode) {
  if (cell.size() != objective.arity()) {
    throw std::invalid_argument("interval_eval: cell dimension mismatch");
  }
  if (objective.domain.classify(cell) == CellStatus::infeasible) {
    return Interval::empty();
  }
  const Interval natural = objective.enclose(cell);
  if (natural.is_empty() || mode == EnclosureMode::natural) return natural;
  const Interval mv = mean_value_form(objective, cell);
  const Interval both = natural & mv;
  // Padding makes both forms valid, so an empty intersection cannot occur
  // for a cell with a feasible point; keep the natural form regardless.
  return both.is_empty() ? natural : both;
}

OptimizationResult maximize(const ObjectiveSpec& objective, double tol,
                            std::size_t budget) {
  if (!(tol > 0.0)) throw std::invalid_argument("maximize: tol must be > 0");
  if (budget == 0) throw std::invalid_argument("maximize: budget must be > 0");
  return BranchAndBound(objective, tol, budget).run();
}

std::vector<double> project_to_domain(const ObjectiveSpec& objective,
                                      std::span<const double> x) {
  const auto& bounds = objective.domain.bounds();
  std::vector<double> p(x.begin(), x.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::clamp(p[i], bounds[i].lo(), bounds[i].hi());
  }
  if (feasible(objective, p)) return p;

  const std::vector<double>& anchor = objective.interior_point;
  std::vector<double> trial(p.size());
  auto at = [&](double beta) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      trial[i] = anchor[i] + beta * (p[i] - anchor[i]);
    }
    return feasible(objective, trial);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  at(lo);
  return trial;
}

PointValue local_ascent(const ObjectiveSpec& objective,
                        std::vector<double> start) {
  const std::size_t n = objective.arity();
  std::vector<double> x = project_to_domain(objective, start);
  double fx = safe_value(objective, x);

  double diam = 0.0;
  for (const auto& b : objective.domain.bounds()) diam = std::max(diam, b.width());
  double step = 0.05 * diam;
  constexpr double kMinStep = 1e-12;
  constexpr double kFdStep = 1e-7;
  constexpr int kMaxIterations = 4000;

  std::vector<double> grad(n), probe(n), best(n);
  for (int it = 0; it < kMaxIterations && step > kMinStep; ++it) {
    // Central differences where both probes are feasible, else one-sided.
    for (std::size_t i = 0; i < n; ++i) {
      probe = x;
      probe[i] = x[i] + kFdStep;
      const double up = feasible(objective, probe) ? safe_value(objective, probe)
                                                   : kNegInf;
      probe[i] = x[i] - kFdStep;
      const double down =
          feasible(objective, probe) ? safe_value(objective, probe) : kNegInf;
      if (std::isfinite(up) && std::isfinite(down)) {
        grad[i] = (up - down) / (2 * kFdStep);
      } else if (std::isfinite(up)) {
        grad[i] = (up - fx) / kFdStep;
      } else if (std::isfinite(down)) {
        grad[i] = (fx - down) / kFdStep;
      } else {
        grad[i] = 0.0;
      }
    }
    double gnorm = 0.0;
    for (double g : grad) gnorm += g * g;
    gnorm = std::sqrt(gnorm);

    double best_value = fx;
    bool improved = false;
    auto try_candidate = [&](const std::vector<double>& c) {
      std::vector<double> p = project_to_domain(objective, c);
      const double v = safe_value(objective, p);
      if (v > best_value) {
        best_value = v;
        best = std::move(p);
        improved = true;
      }
    };
    if (gnorm > 0.0) {
      for (std::size_t i = 0; i < n; ++i) probe[i] = x[i] + step * grad[i] / gnorm;
      try_candidate(probe);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (double sign : {1.0, -1.0}) {
        probe = x;
        probe[i] += sign * step;
        try_candidate(probe);
      }
    }
    if (improved) {
      x = best;
      fx = best_value;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  return PointValue{std::move(x), fx};
}

PointValue multistart_local(const ObjectiveSpec& objective, std::size_t starts,
                            std::uint64_t seed) {
  if (starts == 0) throw std::invalid_argument("multistart_local: starts >= 1");
  const std::size_t n = objective.arity();
  const auto& bounds = objective.domain.bounds();

  // Starting points are drawn serially so they do not depend on scheduling.
  hankelkit::detail::SeededRng rng(seed);
  std::vector<std::vector<double>> points(starts, std::vector<double>(n));
  for (auto& p : points) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = bounds[i].lo() + rng.uniform() * bounds[i].width();
      }
      if (feasible(objective, p)) break;
    }
    if (!feasible(objective, p)) p = project_to_domain(objective, p);
  }

  std::vector<PointValue> results(starts);
  hankelkit::detail::parallel_for(starts, [&](std::size_t i) {
    results[i] = local_ascent(objective, points[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < starts; ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  return results[best];
}

PointValue grid_oracle(const ObjectiveSpec& objective, std::size_t resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("grid_oracle: resolution must be >= 2");
  }
  const std::size_t n = objective.arity();
  const auto& bounds = objective.domain.bounds();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / resolution) {
      throw std::invalid_argument("grid_oracle: grid too large");
    }
    total *= resolution;
  }
  const double denom = static_cast<double>(resolution - 1);

  struct Best {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    double value = kNegInf;
  };
  const std::size_t chunks = hankelkit::detail::worker_count() * 4;
  std::vector<Best> partial(chunks);
  hankelkit::detail::parallel_for(chunks, [&](std::size_t c) {
    const std::size_t begin = total * c / chunks;
    const std::size_t end = total * (c + 1) / chunks;
    std::vector<double> x(n);
    Best b;
    for (std::size_t flat = begin; flat < end; ++flat) {
      std::size_t rem = flat;
      for (std::size_t i = n; i-- > 0;) {
        const std::size_t k = rem % resolution;
        rem /= resolution;
        x[i] = (k + 1 == resolution)
                   ? bounds[i].hi()
                   : bounds[i].lo() + bounds[i].width() * (static_cast<double>(k) / denom);
      }
      if (!feasible(objective, x)) continue;
      const double v = safe_value(objective, x);
      if (v > b.value) b = Best{flat, v};
    }
    partial[c] = b;
  });

  Best best;
  for (const auto& b : partial) {
    if (b.value > best.value) best = b;
  }
  if (best.index == std::numeric_limits<std::size_t>::max()) {
    throw NoFeasiblePoint("grid_oracle: no feasible grid point for " +
                          objective.name);
  }
  PointValue out;
  out.point.resize(n);
  std::size_t rem = best.index;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t k = rem % resolution;
    rem /= resolution;
    out.point[i] = (k + 1 == resolution)
                       ? bounds[i].hi()
                       : bounds[i].lo() + bounds[i].width() * (static_cast<double>(k) / denom);
  }
  out.value = best.value;
  return out;
}

} // namespace hankelkit::opt
