#include <gtest/gtest.h>

#include <cmath>

#include "hankelkit/detail/rng.hpp"
#include "hankelkit/optimizer.hpp"

namespace {

namespace ob = hankelkit::objectives;
namespace opt = hankelkit::opt;
using opt::Interval;

std::vector<Interval> random_cell(hankelkit::detail::SeededRng& rng,
                                  const ob::ObjectiveSpec& obj) {
  std::vector<Interval> cell;
  for (const auto& b : obj.domain.bounds()) {
    double u = b.lo() + b.width() * rng.uniform();
    double v = b.lo() + b.width() * rng.uniform();
    if (u > v) std::swap(u, v);
    cell.emplace_back(u, v);
  }
  return cell;
}

std::vector<double> random_point(hankelkit::detail::SeededRng& rng,
                                 std::span<const Interval> cell) {
  std::vector<double> x;
  for (const auto& c : cell) x.push_back(c.lo() + c.width() * rng.uniform());
  return x;
}

TEST(IntervalEval, DegenerateCells) {
  const Interval h1 = opt::interval_eval(ob::objective("h1"), std::vector<Interval>{1.0});
  EXPECT_TRUE(h1.contains(1.0));
  EXPECT_LT(h1.width(), 1e-14);
  const Interval psi =
      opt::interval_eval(ob::objective("psi"), std::vector<Interval>{0.0, 0.0});
  EXPECT_TRUE(psi.contains(1.0));
  EXPECT_LT(psi.width(), 1e-14);
}

TEST(IntervalEval, InfeasibleCellIsEmpty) {
  const auto& psi = ob::objective("psi");
  EXPECT_TRUE(opt::interval_eval(psi, std::vector<Interval>{Interval(0.9, 1.0),
                                                            Interval(0.4, 0.5)})
                  .is_empty());
  EXPECT_THROW(opt::interval_eval(psi, std::vector<Interval>{0.0}), std::invalid_argument);
}

TEST(IntervalEval, EnclosesPointValues) {
  hankelkit::detail::SeededRng rng(61);
  std::size_t checked = 0;
  for (const auto& obj : ob::registry()) {
    for (int c = 0; c < 100; ++c) {
      const auto cell = random_cell(rng, obj);
      for (auto mode : {opt::EnclosureMode::natural, opt::EnclosureMode::mean_value}) {
        const Interval enc = opt::interval_eval(obj, cell, mode);
        for (int p = 0; p < 100; ++p) {
          const auto x = random_point(rng, cell);
          if (obj.domain.violation(x) > 0.0) continue;
          ++checked;
          EXPECT_TRUE(enc.contains(obj.eval(x)))
              << obj.name << " value " << obj.eval(x) << " outside " << enc;
        }
      }
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(IntervalEval, NaturalFormIsInclusionMonotone) {
  hankelkit::detail::SeededRng rng(62);
  for (const auto& obj : ob::registry()) {
    for (int c = 0; c < 200; ++c) {
      const auto cell = random_cell(rng, obj);
      const Interval parent = opt::interval_eval(obj, cell, opt::EnclosureMode::natural);
      if (parent.is_empty()) continue;
      std::size_t axis = 0;
      for (std::size_t i = 1; i < cell.size(); ++i)
        if (cell[i].width() > cell[axis].width()) axis = i;
      for (int half = 0; half < 2; ++half) {
        auto child = cell;
        const double m = cell[axis].mid();
        child[axis] = half ? Interval(m, cell[axis].hi()) : Interval(cell[axis].lo(), m);
        const Interval e = opt::interval_eval(obj, child, opt::EnclosureMode::natural);
        if (e.is_empty()) continue;
        EXPECT_TRUE(parent.contains(e)) << obj.name << ": " << e << " vs " << parent;
      }
    }
  }
}

TEST(Maximize, H1) {
  const auto r = opt::maximize(ob::objective("h1"), 1e-9);
  EXPECT_EQ(r.status, opt::Status::converged);
  EXPECT_NEAR(r.incumbent_value, 1.0, 1e-9);
  EXPECT_LE(r.upper_bound, 1.0 + 1e-9 + 1e-15);
  EXPECT_GE(r.upper_bound, 1.0);
  EXPECT_NEAR(r.incumbent_point[0], 1.0, 1e-9);
}

TEST(Maximize, PsiOnCurvedEdge) {
  const auto r = opt::maximize(ob::objective("psi"), 1e-7);
  EXPECT_EQ(r.status, opt::Status::converged);
  EXPECT_NEAR(r.incumbent_value, 1.4846575, 1e-5);
  const double x = r.incumbent_point[0];
  EXPECT_NEAR(x, 0.6618, 1e-3);
  EXPECT_NEAR(r.incumbent_point[1], 0.5 * (1.0 - x * x), 1e-6);
}

TEST(Maximize, G1) {
  const auto r = opt::maximize(ob::objective("g1"), 1e-9);
  EXPECT_NEAR(r.incumbent_value, 1.0, 1e-9);
  EXPECT_NEAR(r.incumbent_point[0], 1.0, 1e-9);
}

TEST(Maximize, ResultInvariantsOnEveryObjective) {
  for (const auto& obj : ob::registry()) {
    const auto r = opt::maximize(obj, 1e-6);
    EXPECT_EQ(r.status, opt::Status::converged) << obj.name;
    EXPECT_LE(r.incumbent_value, r.upper_bound) << obj.name;
    EXPECT_DOUBLE_EQ(r.gap, r.upper_bound - r.incumbent_value);
    EXPECT_GE(r.gap, 0.0);
    EXPECT_LE(r.gap, 1e-6);
    EXPECT_LE(obj.domain.violation(r.incumbent_point), opt::kFeasibilityTol) << obj.name;
    EXPECT_DOUBLE_EQ(obj.eval(r.incumbent_point), r.incumbent_value);
  }
}

TEST(Maximize, OneDimensionalConvergeWithinBudget) {
  for (const char* name : {"h1", "g1", "g2", "hstar"}) {
    const auto r = opt::maximize(ob::objective(name), 1e-9, 1'000'000);
    EXPECT_EQ(r.status, opt::Status::converged) << name;
    EXPECT_LE(r.gap, 1e-9);
  }
}

TEST(Maximize, BudgetExhaustionIsReported) {
  const auto r = opt::maximize(ob::objective("psi"), 1e-12, 5);
  EXPECT_EQ(r.status, opt::Status::budget_exhausted);
  EXPECT_LE(r.nodes_processed, 5u);
  EXPECT_GE(r.upper_bound, 1.4846575);
  EXPECT_LE(r.incumbent_value, r.upper_bound);
}

TEST(Maximize, Preconditions) {
  EXPECT_THROW(opt::maximize(ob::objective("h1"), 0.0), std::invalid_argument);
  EXPECT_THROW(opt::maximize(ob::objective("h1"), -1.0), std::invalid_argument);
  EXPECT_THROW(opt::maximize(ob::objective("h1"), 1e-7, 0), std::invalid_argument);
}

TEST(Maximize, Deterministic) {
  for (const char* name : {"psi", "psi2", "hstar"}) {
    const auto a = opt::maximize(ob::objective(name), 1e-7);
    const auto b = opt::maximize(ob::objective(name), 1e-7);
    EXPECT_EQ(a.upper_bound, b.upper_bound);
    EXPECT_EQ(a.incumbent_value, b.incumbent_value);
    EXPECT_EQ(a.incumbent_point, b.incumbent_point);
  }
}

TEST(Soundness, GridNeverBeatsCertifiedBound) {
  for (const auto& obj : ob::registry()) {
    const double tol = 1e-7;
    const auto r = opt::maximize(obj, tol);
    const std::size_t res = obj.arity() == 1 ? 100'000 : obj.arity() == 2 ? 400 : 60;
    const auto g = opt::grid_oracle(obj, res);
    EXPECT_LE(g.value, r.upper_bound + tol) << obj.name;
  }
}

TEST(GridOracle, H1AndHstar) {
  const auto h1 = opt::grid_oracle(ob::objective("h1"), 1'000'000);
  EXPECT_GE(h1.value, 1.0 - 1e-6);
  const auto hs = opt::grid_oracle(ob::objective("hstar"), 1'000'000);
  EXPECT_NEAR(hs.value, 4.8737995608, 1e-9);
  EXPECT_NEAR(hs.point[0], 0.2840914, 1e-6);
}

TEST(GridOracle, Errors) {
  EXPECT_THROW(opt::grid_oracle(ob::objective("h1"), 1), std::invalid_argument);
  auto never = ob::make_objective(
      {"never", {"t"}, "empty domain"}, [](auto x) { return x[0]; },
      opt::BoxRegion({Interval(0.0, 1.0)},
                     {opt::make_constraint("1 <= 0", [](auto v) { return v[0] - v[0] + 1.0; })}),
      {0.5});
  EXPECT_THROW(opt::grid_oracle(never, 10), opt::NoFeasiblePoint);
}

TEST(Multistart, MatchesOracles) {
  const auto psi = opt::multistart_local(ob::objective("psi"), 64, 1);
  const auto grid = opt::grid_oracle(ob::objective("psi"), 2000);
  const auto bb = opt::maximize(ob::objective("psi"), 1e-9);
  EXPECT_GE(psi.value, grid.value);
  EXPECT_LE(psi.value, bb.upper_bound);
  EXPECT_NEAR(psi.value, bb.incumbent_value, 1e-8);

  const auto h1 = opt::multistart_local(ob::objective("h1"), 8, 2);
  EXPECT_NEAR(h1.value, 1.0, 1e-12);
  EXPECT_NEAR(h1.point[0], 1.0, 1e-12);

  const auto psi2 = opt::multistart_local(ob::objective("psi2"), 256, 3);
  EXPECT_LE(psi2.value, opt::maximize(ob::objective("psi2")).upper_bound);
}

TEST(Multistart, DeterministicGivenSeed) {
  const auto a = opt::multistart_local(ob::objective("psi1"), 16, 9);
  const auto b = opt::multistart_local(ob::objective("psi1"), 16, 9);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.point, b.point);
  EXPECT_THROW(opt::multistart_local(ob::objective("psi1"), 0, 9), std::invalid_argument);
}

TEST(Projection, LandsInDomain) {
  const auto& psi = ob::objective("psi");
  for (const auto& p : std::vector<std::vector<double>>{{0.9, 0.5}, {2.0, -1.0}, {0.5, 0.1}}) {
    const auto q = opt::project_to_domain(psi, p);
    EXPECT_LE(psi.domain.violation(q), opt::kFeasibilityTol);
  }
  EXPECT_EQ(opt::project_to_domain(psi, std::vector<double>{0.5, 0.1}),
            (std::vector<double>{0.5, 0.1}));
}

} // namespace
