#include "hankelkit/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

namespace hankelkit::objectives {

namespace k = kernels;

namespace {

// Upper box bound that is guaranteed not to cut off the true value 1/sqrt(n).
double inv_sqrt_upper(double n) {
  return Interval::around(1.0 / std::sqrt(n)).hi();
}

std::vector<ObjectiveSpec> build_registry() {
  std::vector<ObjectiveSpec> r;

  r.push_back(make_objective(
      {"h1", {"t"}, "|H2(3)| on U with a2 = 0: (3 - 2t^2 + 12t^3 - t^4)/12",
       1.0, 0.0},
      [](auto x) { return k::h1(x[0]); }, unit_interval_domain(), {0.5}));

  r.push_back(make_objective(
      {"phi1", {"x", "y", "z"}, "|H2(3)| on U: 3z + 4xy + x^3 + y^2"},
      [](auto x) { return k::phi1(x[0], x[1], x[2]); }, phi1_domain(),
      {0.3, 0.1, 0.05}));

  r.push_back(make_objective(
      {"psi", {"x", "y"},
       "|H2(3)| on U after eliminating z: 1 + x - 2x^2 + x^4 + 4xy - 3y^2",
       1.4846575, 1e-7},
      [](auto x) { return k::psi(x[0], x[1]); }, psi_domain(), {0.5, 0.1}));

  r.push_back(make_objective(
      {"h2", {"c2", "c1"},
       "|H2(4)| on U with a2 = 0: A c2^4 + B c2^2 + C", 1.0, 0.0},
      [](auto x) { return k::h2(x[0], x[1]); }, h2_domain(), {0.1, 0.5}));

  r.push_back(make_objective(
      {"g1", {"t"}, "h2 at c2 = 0: (41t^4 + 14t^2 + 17)/72", 1.0, 0.0},
      [](auto x) { return k::g1(x[0]); }, unit_interval_domain(), {0.5}));

  r.push_back(make_objective(
      {"g2", {"t"},
       "h2 at c2 = (1-t^2)/2: (17t^6 - 12t^5 + 38t^4 - 24t^3 + 17t^2 + 36t)/72",
       1.0, 0.0},
      [](auto x) { return k::g2(x[0]); }, unit_interval_domain(), {0.5}));

  r.push_back(make_objective(
      {"psi1", {"y", "z"},
       "|H2(3)| on S with a2 = 0: (4/sqrt7) y sqrt(1-3y^2-5z^2) + 6y^3 + 4z^2"},
      [](auto x) { return k::psi1(x[0], x[1]); }, psi1_domain(), {0.2, 0.1}));

  r.push_back(make_objective(
      {"psi2", {"x", "y", "z"},
       "|H2(3)| on S: (6/sqrt7) sqrt(1-x^2-3y^2-5z^2) + 12xyz + 3x^2y^2 + "
       "6y^3 + 2x^4y + 2x^3z + x^6 + 4z^2"},
      [](auto x) { return k::psi2(x[0], x[1], x[2]); }, psi2_domain(),
      {0.2, 0.2, 0.1}));

  r.push_back(make_objective(
      {"hstar", {"x"}, "|H2(3)| on S after eliminating y and z", 4.8986977,
       1e-7},
      [](auto x) { return k::hstar(x[0]); }, unit_interval_domain(), {0.5}));

  return r;
}

} // namespace

void check_domain(const std::string& name, const BoxRegion& domain,
                  std::span<const double> x) {
  if (x.size() != domain.dimension()) {
    throw DomainError(name + ": expected " +
                      std::to_string(domain.dimension()) + " arguments");
  }
  const double v = domain.violation(x);
  if (!(v <= kDomainTol)) {
    std::ostringstream os;
    os << name << ": point (";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ") lies outside the domain (violation " << v << ")";
    throw DomainError(os.str());
  }
}

BoxRegion unit_interval_domain() { return BoxRegion({Interval(0.0, 1.0)}, {}); }

BoxRegion psi_domain() {
  return BoxRegion(
      {Interval(0.0, 1.0), Interval(0.0, 0.5)},
      {opt::make_constraint("y - (1 - x^2)/2 <= 0", [](auto v) {
        using T = std::remove_cvref_t<decltype(v[0])>;
        return v[1] - (T(1) - k::ipow(v[0], 2)) / T(2);
      })});
}

BoxRegion phi1_domain() {
  return BoxRegion(
      {Interval(0.0, 1.0), Interval(0.0, 0.5), Interval(0.0, Interval::around(1.0 / 3.0).hi())},
      {opt::make_constraint("y - (1 - x^2)/2 <= 0",
                            [](auto v) {
                              using T = std::remove_cvref_t<decltype(v[0])>;
                              return v[1] - (T(1) - k::ipow(v[0], 2)) / T(2);
                            }),
       opt::make_constraint(
           "z - (1 - x^2 - 4y^2/(1+x))/3 <= 0", [](auto v) {
             using T = std::remove_cvref_t<decltype(v[0])>;
             return v[2] - (T(1) - k::ipow(v[0], 2) -
                            T(4) * k::ipow(v[1], 2) / (T(1) + v[0])) /
                               T(3);
           })});
}

BoxRegion h2_domain() {
  return BoxRegion(
      {Interval(0.0, 0.5), Interval(0.0, 1.0)},
      {opt::make_constraint("c2 - (1 - c1^2)/2 <= 0", [](auto v) {
        using T = std::remove_cvref_t<decltype(v[0])>;
        return v[0] - (T(1) - k::ipow(v[1], 2)) / T(2);
      })});
}

BoxRegion psi1_domain() {
  // With z >= 0, z <= sqrt(1-3y^2)/sqrt5 is 3y^2 + 5z^2 <= 1.
  return BoxRegion(
      {Interval(0.0, inv_sqrt_upper(3.0)), Interval(0.0, inv_sqrt_upper(5.0))},
      {opt::make_constraint("3y^2 + 5z^2 - 1 <= 0", [](auto v) {
        using T = std::remove_cvref_t<decltype(v[0])>;
        return T(3) * k::ipow(v[0], 2) + T(5) * k::ipow(v[1], 2) - T(1);
      })});
}

BoxRegion psi2_domain() {
  return BoxRegion(
      {Interval(0.0, 1.0), Interval(0.0, inv_sqrt_upper(3.0)),
       Interval(0.0, inv_sqrt_upper(5.0))},
      {opt::make_constraint("x^2 + 3y^2 - 1 <= 0",
                            [](auto v) {
                              using T = std::remove_cvref_t<decltype(v[0])>;
                              return k::ipow(v[0], 2) +
                                     T(3) * k::ipow(v[1], 2) - T(1);
                            }),
       opt::make_constraint("x^2 + 3y^2 + 5z^2 - 1 <= 0", [](auto v) {
         using T = std::remove_cvref_t<decltype(v[0])>;
         return k::ipow(v[0], 2) + T(3) * k::ipow(v[1], 2) +
                T(5) * k::ipow(v[2], 2) - T(1);
       })});
}

BoxRegion psi1_majorant_domain() {
  // The majorant is a polynomial; only y <= 1/sqrt3 matters.
  return BoxRegion(
      {Interval(0.0, inv_sqrt_upper(3.0))},
      {opt::make_constraint("3y^2 - 1 <= 0", [](auto v) {
        using T = std::remove_cvref_t<decltype(v[0])>;
        return T(3) * k::ipow(v[0], 2) - T(1);
      })});
}

const std::vector<ObjectiveSpec>& registry() {
  static const std::vector<ObjectiveSpec> r = build_registry();
  return r;
}

const ObjectiveSpec* find_objective(std::string_view name) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(),
                         [&](const ObjectiveSpec& s) { return s.name == name; });
  return it == r.end() ? nullptr : &*it;
}

const ObjectiveSpec& objective(std::string_view name) {
  if (const ObjectiveSpec* s = find_objective(name)) return *s;
  throw UnknownObjective("unknown objective '" + std::string(name) + "'");
}

std::vector<std::string> objective_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

namespace {

double call(std::string_view name, std::initializer_list<double> args) {
  return objective(name).eval(std::span<const double>(args.begin(), args.size()));
}

void check_unit(const char* name, double t) {
  if (!(t >= -kDomainTol && t <= 1.0 + kDomainTol)) {
    throw DomainError(std::string(name) + ": argument " + std::to_string(t) +
                      " outside [0, 1]");
  }
}

} // namespace

double h1(double t) { return call("h1", {t}); }
double h1_d1(double t) {
  check_unit("h1_d1", t);
  return k::h1_d1(t);
}

double phi1(double x, double y, double z) { return call("phi1", {x, y, z}); }

double psi(double x, double y) { return call("psi", {x, y}); }
double psi_dx(double x, double y) {
  check_domain("psi_dx", psi_domain(), std::array{x, y});
  return k::psi_dx(x, y);
}
double psi_dy(double x, double y) {
  check_domain("psi_dy", psi_domain(), std::array{x, y});
  return k::psi_dy(x, y);
}

double h2_A(double c1) {
  check_unit("h2_A", c1);
  return k::h2_A(c1);
}
double h2_B(double c1) {
  check_unit("h2_B", c1);
  return k::h2_B(c1);
}
double h2_C(double c1) {
  check_unit("h2_C", c1);
  return k::h2_C(c1);
}
double h2(double c2, double c1) { return call("h2", {c2, c1}); }

double g1(double t) { return call("g1", {t}); }
double g2(double t) { return call("g2", {t}); }
double g2_d1(double t) {
  check_unit("g2_d1", t);
  return k::g2_d1(t);
}
double g2_d2(double t) {
  check_unit("g2_d2", t);
  return k::g2_d2(t);
}
double g2_d3(double t) {
  check_unit("g2_d3", t);
  return k::g2_d3(t);
}

double psi1(double y, double z) { return call("psi1", {y, z}); }

double psi1_majorant(double y) {
  check_domain("psi1_majorant", psi1_majorant_domain(), std::array{y});
  return k::psi1_majorant(y);
}

double psi1_relaxed_bound() {
  return 4.0 / std::sqrt(21.0) + 2.0 / std::sqrt(3.0);
}

double psi2(double x, double y, double z) { return call("psi2", {x, y, z}); }
double hstar(double x) { return call("hstar", {x}); }

ObjectiveSpec psi_curved_edge_objective() {
  return make_objective({"psi_curved_edge", {"x"},
                         "psi on y = (1 - x^2)/2", 1.4846575, 1e-7},
                        [](auto x) { return k::psi_curved_edge(x[0]); },
                        unit_interval_domain(), {0.5});
}

ObjectiveSpec psi_axis_edge_objective() {
  return make_objective({"psi_axis_edge", {"x"}, "psi on y = 0", 1.1295, 1e-4},
                        [](auto x) { return k::psi_axis_edge(x[0]); },
                        unit_interval_domain(), {0.5});
}

ObjectiveSpec psi1_majorant_objective() {
  return make_objective(
      {"psi1_majorant", {"y"},
       "4/5 + (4/sqrt7) y - (12/5) y^2 + 6 y^3 on [0, 1/sqrt3]", 2.02757,
       1e-5},
      [](auto x) { return k::psi1_majorant(x[0]); }, psi1_majorant_domain(),
      {0.3});
}

} // namespace hankelkit::objectives
