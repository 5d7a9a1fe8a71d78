#include "hankelkit/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hankelkit/objectives.hpp"

namespace hankelkit::hankel {

Complex hankel2(const PowerSeries& f, std::size_t n) {
  if (n < 1) throw series::SeriesError("hankel2: n must be >= 1");
  if (f.order() < n + 2) {
    throw series::SeriesError("hankel2: need coefficients through a_" +
                              std::to_string(n + 2));
  }
  return f[n] * f[n + 2] - f[n + 1] * f[n + 1];
}

Complex hankel2_grunsky(const series::GrunskyTable& table) {
  if (table.cutoff() < 7) {
    throw series::SeriesError("hankel2_grunsky: table must reach index 7");
  }
  const Complex w11 = table(1, 1), w13 = table(1, 3), w15 = table(1, 5),
                w17 = table(1, 7);
  const Complex w11sq = w11 * w11;
  const Complex w11cu = w11sq * w11;
  return 2.0 * (2.0 * w13 + 3.0 * w11sq) * w17 - 12.0 * w11 * w13 * w15 -
         3.0 * w11sq * w13 * w13 + 6.0 * w13 * w13 * w13 -
         2.0 * w11cu * w11 * w13 + 2.0 * w11cu * w15 - w11cu * w11cu -
         4.0 * w15 * w15;
}

namespace {

PowerSeries taylor(Complex (*a)(std::size_t)) {
  PowerSeries f(kFixtureOrder);
  for (std::size_t n = 1; n <= kFixtureOrder; ++n) f[n] = a(n);
  return f;
}

std::vector<Fixture> build_fixtures() {
  using series::UFunctionSpec;
  std::vector<Fixture> v;
  v.push_back(Fixture{
      "identity", "z",
      taylor([](std::size_t n) { return Complex(n == 1 ? 1.0 : 0.0); }),
      UFunctionSpec(0.0, {}), [](std::size_t) { return Complex{}; }});
  v.push_back(Fixture{
      "halfplane", "z/(1-z)", taylor([](std::size_t) { return Complex(1.0); }),
      UFunctionSpec(1.0, {}), [](std::size_t) { return Complex{}; }});
  v.push_back(Fixture{
      "odd-koebe", "z/(1-z^2)",
      taylor([](std::size_t n) { return Complex(n % 2 == 1 ? 1.0 : 0.0); }),
      UFunctionSpec(0.0, {1.0}),
      [](std::size_t n) { return Complex(n % 2 == 1 ? 1.0 : -1.0); }});
  v.push_back(Fixture{
      "koebe", "z/(1-z)^2",
      taylor([](std::size_t n) { return Complex(static_cast<double>(n)); }),
      UFunctionSpec(2.0, {-1.0}), [](std::size_t) { return Complex(-1.0); }});
  return v;
}

std::string describe_point(const objectives::ObjectiveSpec& obj,
                           std::span<const double> x) {
  std::ostringstream os;
  os << std::setprecision(10);
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << (i ? ", " : "") << obj.variables[i] << " = " << x[i];
  }
  return os.str();
}

std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

void judge(HankelReport& r, double tol) {
  r.tolerance = tol + r.paper_resolution;
  r.agreed = std::abs(r.paper_bound - r.recomputed_bound) <= r.tolerance;
}

opt::Status worst(opt::Status a, opt::Status b) {
  return (a == opt::Status::budget_exhausted ||
          b == opt::Status::budget_exhausted)
             ? opt::Status::budget_exhausted
             : opt::Status::converged;
}

HankelReport from_single(std::string id, std::string statement,
                         const objectives::ObjectiveSpec& obj, double tol,
                         std::size_t budget) {
  const opt::OptimizationResult res = opt::maximize(obj, tol, budget);
  HankelReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.paper_bound = obj.published_maximum.value_or(0.0);
  r.paper_resolution = obj.published_resolution;
  r.recomputed_bound = res.incumbent_value;
  r.certified_upper_bound = res.upper_bound;
  r.argmax = res.incumbent_point;
  r.argmax_description = describe_point(obj, res.incumbent_point);
  r.status = res.status;
  r.notes.push_back("branch-and-bound on " + obj.name + ": " +
                    std::to_string(res.nodes_processed) + " nodes, gap " +
                    fmt(res.gap, 3) + ", " + opt::to_string(res.status));
  judge(r, tol);
  return r;
}

} // namespace

const std::vector<Fixture>& sharp_examples() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  const auto& all = sharp_examples();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Fixture& f) { return f.name == name; });
  return it == all.end() ? nullptr : &*it;
}

std::vector<EdgeMaximum> psi_boundary_maxima(double tol, std::size_t budget) {
  std::vector<EdgeMaximum> out;
  // x = 0: psi(0, y) = 1 - 3y^2 on [0, 1/2]; x = 1: the edge is the point
  // (1, 0). Both are closed form.
  out.push_back({"x = 0", objectives::psi(0.0, 0.0), {0.0, 0.0}});
  out.push_back({"x = 1", objectives::psi(1.0, 0.0), {1.0, 0.0}});

  const auto axis = opt::maximize(objectives::psi_axis_edge_objective(), tol, budget);
  out.push_back({"y = 0", axis.incumbent_value, {axis.incumbent_point[0], 0.0}});

  const auto curved =
      opt::maximize(objectives::psi_curved_edge_objective(), tol, budget);
  const double x = curved.incumbent_point[0];
  out.push_back({"y = (1 - x^2)/2", curved.incumbent_value, {x, 0.5 * (1.0 - x * x)}});
  return out;
}

std::vector<HankelReport> reproduce_theorems(double tol, std::size_t budget) {
  if (!(tol > 0.0)) throw std::invalid_argument("reproduce_theorems: tol > 0");
  namespace ob = objectives;
  std::vector<HankelReport> reports;

  // 1a: |H2(3)| <= max h1 on [0, 1] for f in U with a2 = 0.
  reports.push_back(from_single("1a", "|H2(3)(f)| <= 1 for f in U with a2 = 0",
                                ob::objective("h1"), tol, budget));

  // 1b: max psi over its domain, attained on the boundary.
  {
    HankelReport r = from_single("1b", "|H2(3)(f)| <= 1.4846575... for f in U",
                                 ob::objective("psi"), tol, budget);
    for (const auto& e : psi_boundary_maxima(tol, budget)) {
      std::ostringstream os;
      os << std::setprecision(10) << "edge " << e.edge << ": max " << e.value
         << " at x = " << e.argmax[0];
      r.notes.push_back(os.str());
    }
    reports.push_back(std::move(r));
  }

  // 2: h2 <= max(g1, g2), each maximized on [0, 1].
  {
    const auto r1 = opt::maximize(ob::objective("g1"), tol, budget);
    const auto r2 = opt::maximize(ob::objective("g2"), tol, budget);
    const auto rh = opt::maximize(ob::objective("h2"), tol, budget);
    HankelReport r;
    r.id = "2";
    r.statement = "|H2(4)(f)| <= 1 for f in U with a2 = 0";
    r.paper_bound = 1.0;
    const bool g1_wins = r1.incumbent_value >= r2.incumbent_value;
    const auto& win = g1_wins ? r1 : r2;
    r.recomputed_bound = win.incumbent_value;
    r.certified_upper_bound = std::max(r1.upper_bound, r2.upper_bound);
    r.argmax = win.incumbent_point;
    r.argmax_description =
        std::string(g1_wins ? "g1" : "g2") + " at t = " + fmt(win.incumbent_point[0]);
    r.status = worst(worst(r1.status, r2.status), rh.status);
    r.notes.push_back("max g1 = " + fmt(r1.incumbent_value) + " at t = " +
                      fmt(r1.incumbent_point[0]));
    r.notes.push_back("max g2 = " + fmt(r2.incumbent_value) + " at t = " +
                      fmt(r2.incumbent_point[0]));
    r.notes.push_back("direct max h2 = " + fmt(rh.incumbent_value) + " (upper " +
                      fmt(rh.upper_bound) + ") at " +
                      describe_point(ob::objective("h2"), rh.incumbent_point));
    judge(r, tol);
    reports.push_back(std::move(r));
  }

  // 3a: relaxed majorant of psi1, maximal at y = 1/sqrt3.
  {
    HankelReport r =
        from_single("3a", "|H2(3)(f)| <= 2.02757... for f in S with a2 = 0",
                    ob::psi1_majorant_objective(), tol, budget);
    r.notes.push_back("closed form 4/sqrt21 + 2/sqrt3 = " +
                      fmt(ob::psi1_relaxed_bound(), 17));
    const auto direct = opt::maximize(ob::objective("psi1"), tol, budget);
    r.notes.push_back("max psi1 itself (not claimed as sharp) = " +
                      fmt(direct.incumbent_value) + " at " +
                      describe_point(ob::objective("psi1"), direct.incumbent_point));
    r.status = worst(r.status, direct.status);
    reports.push_back(std::move(r));
  }

  // 3b: hstar, whose published maximum does not reproduce.
  {
    HankelReport r = from_single("3b", "|H2(3)(f)| <= 4.8986977... for f in S",
                                 ob::objective("hstar"), tol, budget);
    r.discrepancy_protocol = true;
    r.notes.push_back("published argmax x = 0.3945667, where hstar = " +
                      fmt(ob::hstar(0.3945667)));
    reports.push_back(std::move(r));
  }

  return reports;
}

} // namespace hankelkit::hankel
