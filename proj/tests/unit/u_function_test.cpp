#include <gtest/gtest.h>

#include "hankelkit/u_function.hpp"
#include "test_support.hpp"

namespace {

using namespace hankelkit::series;

void expect_taylor(const PowerSeries& f, std::vector<Complex> a, double tol = 0.0) {
  ASSERT_EQ(f.order(), a.size());
  EXPECT_EQ(f[0], Complex{});
  for (std::size_t k = 1; k <= a.size(); ++k) {
    EXPECT_LE(std::abs(f[k] - a[k - 1]), tol) << "a_" << k;
  }
}

TEST(UFunctionSpec, PadsAndValidates) {
  const UFunctionSpec s(0.5, {Complex(0.3, 0.1)});
  EXPECT_EQ(s.truncation(), 4u);
  EXPECT_EQ(s.c(1), Complex(0.3, 0.1));
  EXPECT_EQ(s.c(4), Complex{});
  EXPECT_EQ(s.c(9), Complex{});

  EXPECT_THROW(UFunctionSpec(0.0, {2.0}), SpecError);
  EXPECT_THROW(UFunctionSpec(2.5, {}), SpecError);
  EXPECT_THROW(UFunctionSpec(0.0, {0.8, 0.2}), SpecError);
  EXPECT_THROW(UFunctionSpec(0.0, {0.0, 0.0, 0.34}), SpecError);
  EXPECT_THROW(UFunctionSpec(0.0, {0.0, 0.0, 0.0, 0.26}), SpecError);
  EXPECT_THROW(UFunctionSpec(0.0, {std::nan("")}), SpecError);
  EXPECT_NO_THROW(UFunctionSpec(0.0, {0.0, 0.5}));
  EXPECT_NO_THROW(UFunctionSpec(0.0, {0.0, 0.0, 1.0 / 3.0}));
}

TEST(UFunctionSpec, ZOverF) {
  const UFunctionSpec s(Complex(0.5), {0.25, 0.125});
  const auto q = s.z_over_f(4);
  EXPECT_EQ(q[0], Complex(1.0));
  EXPECT_EQ(q[1], Complex(-0.5));
  EXPECT_EQ(q[2], Complex(-0.25));
  EXPECT_EQ(q[3], Complex(-0.125));
  EXPECT_EQ(q[4], Complex{});
}

TEST(CoeffsFromSchwarz, Examples) {
  expect_taylor(coeffs_from_schwarz(UFunctionSpec(0.0, {1.0}), 6),
                {1.0, 0.0, 1.0, 0.0, 1.0, 0.0});
  expect_taylor(coeffs_from_schwarz(UFunctionSpec(1.0, {}), 6),
                {1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  expect_taylor(coeffs_from_schwarz(UFunctionSpec(2.0, {-1.0}), 6),
                {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
}

TEST(CoeffsFromSchwarz, SeriesRouteMatchesKnownFunctions) {
  // Koebe through order 12 takes the series route.
  std::vector<Complex> n;
  for (int k = 1; k <= 12; ++k) n.push_back(static_cast<double>(k));
  expect_taylor(coeffs_from_schwarz(UFunctionSpec(2.0, {-1.0}), 12), n, 1e-12);
  EXPECT_THROW(coeffs_closed_form(UFunctionSpec(0.0, {}), 7), SeriesError);
}

TEST(CoeffsFromSchwarz, ClosedFormEqualsSeriesRoute) {
  for (const auto& spec : test_support::random_specs(100, 21)) {
    const auto closed = coeffs_closed_form(spec, 6);
    const auto series = coeffs_series_route(spec, 6);
    EXPECT_LE(max_abs_difference(closed, series), 1e-12);
  }
}

TEST(Membership, OddKoebe) {
  const auto m = u_membership_check(UFunctionSpec(0.0, {1.0}), 0.99, 4096);
  EXPECT_TRUE(m.member);
  EXPECT_NEAR(m.max_deviation, 0.99 * 0.99, 1e-12);
  EXPECT_NEAR(m.margin, 1.0 - 0.99 * 0.99, 1e-12);
}

TEST(Membership, Koebe) {
  const auto m = u_membership_check(UFunctionSpec(2.0, {-1.0}), 0.99, 4096);
  EXPECT_TRUE(m.member);
  EXPECT_NEAR(m.max_deviation, 0.99 * 0.99, 1e-12);
}

TEST(Membership, DeviationAboveOne) {
  const UFunctionSpec s(0.0, {Complex(0.0, 0.6), 0.0, 0.0, 0.15});
  const auto m = u_membership_check(s, 0.999, 4096);
  EXPECT_FALSE(m.member);
  EXPECT_GT(m.max_deviation, 1.0);
  EXPECT_FALSE(m.diagnostic.empty());
}

TEST(Membership, PoleInsideDiskIsRejected) {
  // z/f = 1 - 1.9z vanishes at z = 1/1.9 although z^2 omega' = 0.
  const auto m = u_membership_check(UFunctionSpec(1.9, {}), 0.999, 4096);
  EXPECT_FALSE(m.member);
  EXPECT_NE(m.diagnostic.find("zero"), std::string::npos);
}

TEST(Membership, PoleOnCircleIsRejected) {
  // z/f = 1 - 2z vanishes at z = 0.5, which is a sample point.
  const auto m = u_membership_check(UFunctionSpec(2.0, {}), 0.5, 8);
  EXPECT_FALSE(m.member);
  EXPECT_NE(m.diagnostic.find("pole"), std::string::npos);
}

TEST(Membership, ArgumentValidation) {
  const UFunctionSpec s(0.0, {});
  EXPECT_THROW(u_membership_check(s, 1.0, 64), std::invalid_argument);
  EXPECT_THROW(u_membership_check(s, 0.0, 64), std::invalid_argument);
  EXPECT_THROW(u_membership_check(s, 0.5, 4), std::invalid_argument);
}

TEST(Membership, ContractionLowersDeviation) {
  for (const auto& spec : test_support::random_members(30, 22, true)) {
    const auto full = u_membership_check(spec);
    const auto half = u_membership_check(spec.scaled(0.5));
    EXPECT_TRUE(half.member);
    EXPECT_LE(half.max_deviation, full.max_deviation + 1e-15);
  }
}

} // namespace
