#include <gtest/gtest.h>

#include <cmath>

#include "hankelkit/detail/rng.hpp"
#include "hankelkit/objectives.hpp"
#include "oracles/numeric_oracles.hpp"

namespace {

namespace ob = hankelkit::objectives;
namespace k = hankelkit::objectives::kernels;
using oracle::Rational;

double uniform(hankelkit::detail::SeededRng& rng, double a, double b) {
  return a + (b - a) * rng.uniform();
}

TEST(Registry, NamesAndLookup) {
  const std::vector<std::string> want{"h1", "phi1", "psi", "h2", "g1",
                                      "g2", "psi1", "psi2", "hstar"};
  EXPECT_EQ(ob::objective_names(), want);
  for (const auto& name : want) {
    const auto& spec = ob::objective(name);
    EXPECT_EQ(spec.arity(), spec.domain.dimension());
    EXPECT_EQ(spec.interior_point.size(), spec.arity());
    EXPECT_LE(spec.domain.violation(spec.interior_point), 0.0) << name;
    EXPECT_FALSE(spec.citation.empty());
  }
  EXPECT_EQ(ob::find_objective("nope"), nullptr);
  EXPECT_THROW(ob::objective("nope"), ob::UnknownObjective);
}

TEST(H1, Examples) {
  EXPECT_DOUBLE_EQ(ob::h1(1.0), 1.0);
  EXPECT_DOUBLE_EQ(ob::h1(0.0), 0.25);
  EXPECT_LT(ob::h1(0.1), ob::h1(0.0));
  EXPECT_LT(oracle::central_difference([](double t) { return ob::h1(t); }, 0.1), 0.0);
  EXPECT_LT(ob::h1_d1(0.1), 0.0);
  EXPECT_THROW(ob::h1(1.1), ob::DomainError);
  EXPECT_THROW(ob::h1(-0.1), ob::DomainError);
}

TEST(Phi1, Examples) {
  EXPECT_NEAR(ob::phi1(0.0, 0.0, 1.0 / 3.0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(ob::phi1(1.0, 0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ob::phi1(0.0, 0.0, 0.0), 0.0);
  EXPECT_THROW(ob::phi1(0.5, 0.4, 0.0), ob::DomainError);
  EXPECT_THROW(ob::phi1(0.0, 0.0, 0.4), ob::DomainError);
}

TEST(Psi, Examples) {
  EXPECT_DOUBLE_EQ(ob::psi(1.0, 0.0), 1.0);
  EXPECT_NEAR(ob::psi(0.26959, 0.0), 1.1295, 1e-4);
  const double x = 0.6618;
  EXPECT_NEAR(ob::psi(x, 0.5 * (1.0 - x * x)), 1.4846575, 1e-6);
  EXPECT_THROW(ob::psi(0.5, 0.4), ob::DomainError);
}

TEST(H2, Examples) {
  EXPECT_DOUBLE_EQ(ob::h2_A(0.0), 16.0 / 9.0);
  EXPECT_DOUBLE_EQ(ob::h2_C(0.0), 17.0 / 72.0);
  EXPECT_DOUBLE_EQ(ob::h2(0.0, 0.0), 17.0 / 72.0);
  EXPECT_DOUBLE_EQ(ob::h2(0.0, 1.0), 1.0);
  for (double t = 0.0; t <= 1.0; t += 0.05) {
    EXPECT_NEAR(ob::h2(0.0, t), ob::g1(t), 1e-15);
  }
  EXPECT_THROW(ob::h2(0.6, 0.0), ob::DomainError);
}

TEST(G1G2, Examples) {
  EXPECT_DOUBLE_EQ(ob::g1(1.0), 1.0);
  EXPECT_DOUBLE_EQ(ob::g1(0.0), 17.0 / 72.0);
  EXPECT_DOUBLE_EQ(ob::g2(1.0), 1.0);
  EXPECT_DOUBLE_EQ(ob::g2(0.0), 0.0);
  EXPECT_THROW(ob::g2(1.5), ob::DomainError);
  EXPECT_THROW(ob::g2_d2(-0.5), ob::DomainError);
}

TEST(Exact, G1EqualsCAndEndpointEqualsG2) {
  EXPECT_EQ(oracle::g2_exact(1), 1);
  EXPECT_EQ(k::g2<Rational>(Rational(1)), 1);
  hankelkit::detail::SeededRng rng(51);
  for (int i = 0; i < 5; ++i) {
    const Rational t(static_cast<long long>(rng.next() % 1000), 1000);
    EXPECT_EQ(k::h2_C<Rational>(t), oracle::g1_exact(t));
    EXPECT_EQ(k::g1<Rational>(t), oracle::g1_exact(t));
    const Rational c2 = (1 - t * t) / 2;
    EXPECT_EQ(oracle::h2_exact(c2, t), oracle::g2_exact(t));
    EXPECT_EQ(k::h2<Rational>(c2, t), oracle::g2_exact(t));
  }
}

TEST(Psi1, Examples) {
  EXPECT_DOUBLE_EQ(ob::psi1(0.0, 0.0), 0.0);
  const double y = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(ob::psi1(y, 0.0), 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(ob::psi1_majorant(y), 4.0 / std::sqrt(21.0) + 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(ob::psi1_relaxed_bound(), 2.02757, 1e-5);
  EXPECT_THROW(ob::psi1(0.5, 0.3), ob::DomainError);
}

TEST(Psi2, Examples) {
  EXPECT_NEAR(ob::psi2(0.0, 0.0, 0.0), 6.0 / std::sqrt(7.0), 1e-15);
  EXPECT_NEAR(ob::psi2(1.0, 0.0, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(ob::psi2(0.0, 1.0 / std::sqrt(3.0), 0.0), 2.0 / std::sqrt(3.0), 1e-14);
  EXPECT_THROW(ob::psi2(0.9, 0.5, 0.0), ob::DomainError);
}

TEST(Hstar, Examples) {
  EXPECT_NEAR(ob::hstar(1.0), 1.0, 1e-15);
  EXPECT_NEAR(ob::hstar(0.0),
              6.0 / std::sqrt(7.0) + 0.2 + 2.0 / std::sqrt(3.0) + 0.8, 1e-14);
  EXPECT_THROW(ob::hstar(1.2), ob::DomainError);
}

TEST(Radicand, ClampWindow) {
  EXPECT_EQ(k::root(-5e-15), 0.0);
  EXPECT_THROW(k::root(-1e-13), ob::DomainError);
  // Within the domain tolerance the clamped radicand is used.
  const double y = 1.0 / std::sqrt(3.0) + 1e-15;
  EXPECT_NO_THROW(ob::psi1(y, 0.0));
}

TEST(Majorization, Phi1BelowPsi) {
  hankelkit::detail::SeededRng rng(52);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform();
    const double y = uniform(rng, 0.0, 0.5 * (1.0 - x * x));
    const double zmax = (1.0 - x * x - 4.0 * y * y / (1.0 + x)) / 3.0;
    const double z = uniform(rng, 0.0, std::max(0.0, zmax));
    EXPECT_LE(ob::phi1(x, y, z), ob::psi(x, y) + 1e-12);
  }
}

TEST(Majorization, H2BelowEndpoints) {
  hankelkit::detail::SeededRng rng(53);
  for (int i = 0; i < 10000; ++i) {
    const double c1 = rng.uniform();
    const double c2 = uniform(rng, 0.0, 0.5 * (1.0 - c1 * c1));
    const double ends = std::max(ob::g1(c1), ob::g2(c1));
    EXPECT_LE(ob::h2(c2, c1), ends + 1e-12);
    EXPECT_NEAR(ob::h2(0.5 * (1.0 - c1 * c1), c1), ob::g2(c1), 1e-14);
  }
}

TEST(Majorization, Psi2BelowHstar) {
  hankelkit::detail::SeededRng rng(54);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform();
    const double y = uniform(rng, 0.0, std::sqrt((1.0 - x * x) / 3.0));
    const double z = uniform(rng, 0.0, std::sqrt(std::max(0.0, (1.0 - x * x - 3.0 * y * y) / 5.0)));
    EXPECT_LE(ob::psi2(x, y, z), ob::hstar(x) + 1e-12);
  }
}

TEST(Derivatives, MatchFiniteDifferences) {
  hankelkit::detail::SeededRng rng(55);
  auto fd = [](auto f, double t) { return oracle::central_difference(f, t); };
  for (int i = 0; i < 100; ++i) {
    const double t = uniform(rng, 0.01, 0.99);
    EXPECT_NEAR(ob::h1_d1(t), fd([](double s) { return ob::h1(s); }, t), 1e-6);
    EXPECT_NEAR(ob::g2_d1(t), fd([](double s) { return ob::g2(s); }, t), 1e-6);
    EXPECT_NEAR(ob::g2_d2(t), fd([](double s) { return ob::g2_d1(s); }, t), 1e-6);
    EXPECT_NEAR(ob::g2_d3(t), fd([](double s) { return ob::g2_d2(s); }, t), 1e-6);

    const double x = uniform(rng, 0.05, 0.95);
    const double y = uniform(rng, 0.01, 0.5 * (1.0 - x * x) - 0.01);
    EXPECT_NEAR(ob::psi_dx(x, y), fd([y](double s) { return k::psi(s, y); }, x), 1e-6);
    EXPECT_NEAR(ob::psi_dy(x, y), fd([x](double s) { return k::psi(x, s); }, y), 1e-6);
  }
}

TEST(Stationarity, PsiPartialsAndReducedGradient) {
  for (double y = 0.0; y <= 0.3; y += 0.01) {
    EXPECT_NEAR(k::psi_dy(1.5 * y, y), 0.0, 1e-15);
  }
  const auto changes = oracle::sign_changes(
      [](double y) { return k::psi_reduced_gradient(y); }, 0.0, 0.5, 10001);
  EXPECT_EQ(changes.count, 0u);
  EXPECT_NEAR(k::psi_reduced_gradient(-0.535), 0.0, 5e-3);
}

TEST(Monotonicity, G2IsIncreasing) {
  for (int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(i) / 999.0;
    EXPECT_GT(ob::g2_d1(t), 0.0);
  }
  EXPECT_DOUBLE_EQ(ob::g2_d1(0.0), 0.5);
}

// The exact g2'' is positive on [0, 1] and g2''' changes sign once, near
// 0.1697. The polynomial whose unique root is 0.22554 is (g2/t)''.
TEST(Monotonicity, G2HigherDerivativesExactForm) {
  for (int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(i) / 999.0;
    EXPECT_GT(ob::g2_d2(t), 0.0);
  }
  const auto d3 = oracle::sign_changes([](double t) { return ob::g2_d3(t); }, 0.0, 1.0, 1000);
  EXPECT_EQ(d3.count, 1u);
  EXPECT_NEAR(d3.root, 0.16970, 1e-4);

  const auto q2 = oracle::sign_changes([](double t) { return k::g2_over_t_d2(t); }, 0.0, 1.0, 10000);
  EXPECT_EQ(q2.count, 1u);
  EXPECT_NEAR(q2.root, 0.22554, 1e-5);
  for (int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(i) / 999.0;
    EXPECT_GT(k::g2_over_t_d3(t), 0.0);
  }
  EXPECT_GT(ob::g2_d1(q2.root), 0.0);
}

TEST(Kernels, GradientEnclosuresAreConsistent) {
  // The registered interval-dual kernel agrees with the closed-form
  // partials of psi at a degenerate cell.
  const auto& psi = ob::objective("psi");
  using D = ob::IntervalDual;
  const double x = 0.4, y = 0.2;
  const std::array<D, 2> v{D::variable(x, 0), D::variable(y, 1)};
  const D r = psi.enclose_gradient(v);
  EXPECT_TRUE(r.value.contains(ob::psi(x, y)));
  EXPECT_TRUE(r.grad[0].contains(ob::psi_dx(x, y)));
  EXPECT_TRUE(r.grad[1].contains(ob::psi_dy(x, y)));
}

} // namespace
