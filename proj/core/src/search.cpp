#include "hankelkit/search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankelkit/detail/parallel.hpp"
#include "hankelkit/hankel.hpp"

namespace hankelkit::hankel {

using series::Complex;
using series::UFunctionSpec;

namespace {

// Uniform in the closed disk of the given radius.
Complex disk_point(detail::SeededRng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, theta);
}

} // namespace

UFunctionSpec sample_spec(detail::SeededRng& rng, bool a2_zero,
                          std::size_t truncation) {
  if (truncation < series::kMinSchwarzCoefficients) {
    throw std::invalid_argument("sample_spec: truncation must be >= 4");
  }
  const Complex a2 = a2_zero ? Complex{} : disk_point(rng, 2.0);
  std::vector<Complex> c(truncation);
  c[0] = disk_point(rng, 1.0);
  const double m1 = std::abs(c[0]);
  c[1] = disk_point(rng, 0.5 * (1.0 - m1 * m1));
  const double m2 = std::abs(c[1]);
  c[2] = disk_point(
      rng, std::max(0.0, (1.0 - m1 * m1 - 4.0 * m2 * m2 / (1.0 + m1)) / 3.0));
  c[3] = disk_point(rng, std::max(0.0, 0.25 * (1.0 - m1 * m1 - 4.0 * m2 * m2)));
  // Beyond c4 there is no published region; use what is left of the
  // budget sum k|c_k| <= 1, which bounds |z^2 omega'(z)| on the disk.
  double used = 0.0;
  for (std::size_t j = 1; j <= 4; ++j) {
    used += static_cast<double>(j) * std::abs(c[j - 1]);
  }
  for (std::size_t k = 5; k <= truncation; ++k) {
    c[k - 1] = disk_point(rng, std::max(0.0, 1.0 - used) / static_cast<double>(k));
    used += static_cast<double>(k) * std::abs(c[k - 1]);
  }
  // Draws sit inside the region up to rounding; shrink marginally if the
  // validator's tolerance is still exceeded.
  for (double s = 1.0;; s *= 1.0 - 1e-9) {
    std::vector<Complex> scaled = c;
    for (auto& v : scaled) v *= s;
    if (series::coefficient_region_violation(a2, scaled).empty()) {
      return UFunctionSpec(a2, std::move(scaled));
    }
  }
}

SearchOutcome conjecture_search(const SearchOptions& o) {
  if (o.n < 3) throw std::invalid_argument("conjecture_search: n must be >= 3");
  if (o.samples < 1) {
    throw std::invalid_argument("conjecture_search: samples must be >= 1");
  }
  detail::SeededRng rng(o.seed);
  std::vector<UFunctionSpec> specs;
  specs.reserve(o.samples);
  for (std::size_t i = 0; i < o.samples; ++i) {
    specs.push_back(sample_spec(rng, o.a2_zero, o.truncation));
  }

  std::vector<std::optional<SearchRecord>> slots(o.samples);
  detail::parallel_for(o.samples, [&](std::size_t i) {
    const auto m = series::u_membership_check(specs[i], o.radius, o.circle_samples);
    if (!m.member) return;
    const auto f = series::coeffs_from_schwarz(specs[i], o.n + 2);
    const Complex h = hankel2(f, o.n);
    slots[i] = SearchRecord{specs[i], o.n, h, std::abs(h), m.margin, i};
  });

  SearchOutcome out;
  out.samples = o.samples;
  for (auto& s : slots) {
    if (!s) continue;
    ++out.accepted;
    if (!out.best || s->modulus > out.best->modulus) out.best = std::move(s);
  }
  return out;
}

SearchRecord conjecture_search(std::size_t n, std::size_t samples,
                               std::uint64_t seed, bool a2_zero) {
  SearchOptions o;
  o.n = n;
  o.samples = samples;
  o.seed = seed;
  o.a2_zero = a2_zero;
  auto out = conjecture_search(o);
  if (!out.best) {
    throw EmptySearch("conjecture_search: none of " + std::to_string(samples) +
                      " samples passed the membership check");
  }
  return *out.best;
}

} // namespace hankelkit::hankel
