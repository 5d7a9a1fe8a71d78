#include <gtest/gtest.h>

#include "hankelkit/hankel.hpp"
#include "hankelkit/search.hpp"
#include "test_support.hpp"

namespace {

using namespace hankelkit::hankel;
using hankelkit::series::coefficient_region_violation;

TEST(SampleSpec, StaysInRegion) {
  hankelkit::detail::SeededRng rng(81);
  for (int i = 0; i < 2000; ++i) {
    const bool a2_zero = i % 2 == 0;
    const auto s = sample_spec(rng, a2_zero, 6);
    EXPECT_EQ(s.truncation(), 6u);
    EXPECT_TRUE(coefficient_region_violation(s.a2(), s.c()).empty());
    if (a2_zero) EXPECT_EQ(s.a2(), Complex{});
    double l1 = 0.0;
    for (std::size_t k = 1; k <= 4; ++k) l1 += static_cast<double>(k) * std::abs(s.c(k));
    for (std::size_t k = 5; k <= 6; ++k) {
      EXPECT_LE(static_cast<double>(k) * std::abs(s.c(k)), std::max(0.0, 1.0 - l1) + 1e-15);
      l1 += static_cast<double>(k) * std::abs(s.c(k));
    }
  }
  EXPECT_THROW(sample_spec(rng, true, 3), std::invalid_argument);
}

TEST(SampleSpec, Reproducible) {
  hankelkit::detail::SeededRng a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const auto x = sample_spec(a, false, 6);
    const auto y = sample_spec(b, false, 6);
    EXPECT_EQ(x.a2(), y.a2());
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(x.c(k), y.c(k));
  }
}

TEST(ConjectureSearch, ProvenBoundsHold) {
  for (std::size_t n : {3u, 4u}) {
    SearchOptions o;
    o.n = n;
    o.samples = 3000;
    o.seed = 82;
    const auto out = conjecture_search(o);
    ASSERT_TRUE(out.best.has_value());
    EXPECT_GT(out.accepted, 0u);
    EXPECT_LE(out.best->modulus, 1.0 + 1e-9);
    EXPECT_EQ(out.best->n, n);
    EXPECT_DOUBLE_EQ(out.best->modulus, std::abs(out.best->h2_value));
    EXPECT_GT(out.best->membership_margin, 0.0);
  }
}

TEST(ConjectureSearch, RecordMatchesItsSample) {
  SearchOptions o;
  o.n = 5;
  o.samples = 1000;
  o.seed = 83;
  const auto out = conjecture_search(o);
  ASSERT_TRUE(out.best.has_value());
  hankelkit::detail::SeededRng rng(o.seed);
  hankelkit::series::UFunctionSpec spec(0.0, {});
  for (std::size_t i = 0; i <= out.best->sample_index; ++i) spec = sample_spec(rng, true, 6);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(spec.c(k), out.best->spec.c(k));
  const auto f = hankelkit::series::coeffs_from_schwarz(spec, 7);
  EXPECT_EQ(hankel2(f, 5), out.best->h2_value);
}

TEST(ConjectureSearch, Deterministic) {
  SearchOptions o;
  o.n = 4;
  o.samples = 2000;
  o.seed = 84;
  o.a2_zero = false;
  const auto a = conjecture_search(o);
  const auto b = conjecture_search(o);
  ASSERT_TRUE(a.best && b.best);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.best->sample_index, b.best->sample_index);
  EXPECT_EQ(a.best->h2_value, b.best->h2_value);
}

TEST(ConjectureSearch, EmptyAndInvalid) {
  std::uint64_t seed = 0;
  for (;; ++seed) {
    SearchOptions o;
    o.samples = 1;
    o.seed = seed;
    if (conjecture_search(o).accepted == 0) break;
  }
  EXPECT_THROW(conjecture_search(3, 1, seed, true), EmptySearch);
  EXPECT_THROW(conjecture_search(2, 10, 0, true), std::invalid_argument);
  EXPECT_THROW(conjecture_search(3, 0, 0, true), std::invalid_argument);
}

} // namespace
