#include "hankelkit/u_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hankelkit::series {

std::string coefficient_region_violation(Complex a2,
                                         std::span<const Complex> c) {
  auto at = [&](std::size_t k) {
    return k <= c.size() ? std::abs(c[k - 1]) : 0.0;
  };
  const double m1 = at(1), m2 = at(2), m3 = at(3), m4 = at(4);
  std::ostringstream why;
  if (std::abs(a2) > 2.0 + kSpecBoundTol) {
    why << "|a2| = " << std::abs(a2) << " exceeds 2";
  } else if (m1 > 1.0 + kSpecBoundTol) {
    why << "|c1| = " << m1 << " exceeds 1";
  } else if (m2 > 0.5 * (1.0 - m1 * m1) + kSpecBoundTol) {
    why << "|c2| = " << m2 << " exceeds (1-|c1|^2)/2";
  } else if (m3 > (1.0 - m1 * m1 - 4.0 * m2 * m2 / (1.0 + m1)) / 3.0 +
                      kSpecBoundTol) {
    why << "|c3| = " << m3 << " exceeds (1-|c1|^2-4|c2|^2/(1+|c1|))/3";
  } else if (m4 > 0.25 * (1.0 - m1 * m1 - 4.0 * m2 * m2) + kSpecBoundTol) {
    why << "|c4| = " << m4 << " exceeds (1-|c1|^2-4|c2|^2)/4";
  }
  return why.str();
}

UFunctionSpec::UFunctionSpec(Complex a2, std::vector<Complex> c)
    : a2_(a2), c_(std::move(c)) {
  if (c_.size() < kMinSchwarzCoefficients) c_.resize(kMinSchwarzCoefficients);
  for (const auto& v : c_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw SpecError("UFunctionSpec: non-finite Schwarz coefficient");
    }
  }
  if (auto why = coefficient_region_violation(a2_, c_); !why.empty()) {
    throw SpecError("UFunctionSpec: " + why);
  }
}

PowerSeries UFunctionSpec::omega(std::size_t order) const {
  PowerSeries w(order);
  for (std::size_t k = 1; k <= std::min(order, c_.size()); ++k) {
    w[k] = c_[k - 1];
  }
  return w;
}

PowerSeries UFunctionSpec::z_over_f(std::size_t order) const {
  PowerSeries q(order);
  q[0] = 1.0;
  if (order >= 1) q[1] = -a2_;
  for (std::size_t k = 1; k <= c_.size() && k + 1 <= order; ++k) {
    q[k + 1] = -c_[k - 1];
  }
  return q;
}

UFunctionSpec UFunctionSpec::scaled(double s) const {
  std::vector<Complex> c = c_;
  for (auto& v : c) v *= s;
  return UFunctionSpec(a2_, std::move(c));
}

PowerSeries coeffs_closed_form(const UFunctionSpec& spec, std::size_t n_max) {
  if (n_max < 1 || n_max > 6) {
    throw SeriesError("coeffs_closed_form: n_max must lie in [1, 6]");
  }
  const Complex a2 = spec.a2();
  const Complex c1 = spec.c(1), c2 = spec.c(2), c3 = spec.c(3),
                c4 = spec.c(4);
  const Complex a2sq = a2 * a2, a2cu = a2sq * a2, a2qu = a2cu * a2;

  const Complex all[7] = {
      0.0,
      1.0,
      a2,
      c1 + a2sq,
      c2 + 2.0 * a2 * c1 + a2cu,
      c3 + 2.0 * a2 * c2 + c1 * c1 + 3.0 * a2sq * c1 + a2qu,
      c4 + 2.0 * a2 * c3 + 2.0 * c1 * c2 + 3.0 * a2sq * c2 +
          3.0 * a2 * c1 * c1 + 4.0 * a2cu * c1 + a2qu * a2,
  };
  PowerSeries f(n_max);
  for (std::size_t k = 1; k <= n_max; ++k) f[k] = all[k];
  return f;
}

PowerSeries coeffs_series_route(const UFunctionSpec& spec, std::size_t n_max) {
  if (n_max < 1) throw SeriesError("coeffs_series_route: n_max must be >= 1");
  // f = z * (z/f)^{-1}; only the first n_max - 1 coefficients of the
  // reciprocal are needed.
  const PowerSeries r = series_recip(spec.z_over_f(n_max - 1));
  PowerSeries f(n_max);
  for (std::size_t k = 1; k <= n_max; ++k) f[k] = r[k - 1];
  return f;
}

PowerSeries coeffs_from_schwarz(const UFunctionSpec& spec, std::size_t n_max) {
  return n_max <= 6 ? coeffs_closed_form(spec, n_max)
                    : coeffs_series_route(spec, n_max);
}

MembershipResult u_membership_check(const UFunctionSpec& spec, double radius,
                                    std::size_t samples) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw std::invalid_argument("u_membership_check: radius must lie in (0,1)");
  }
  if (samples < 8) {
    throw std::invalid_argument("u_membership_check: need at least 8 samples");
  }
  // z/f is the polynomial q; f = z/q and f' = (q - z q')/q^2.
  const PowerSeries q = spec.z_over_f(spec.truncation() + 1);
  constexpr double kPoleTol = 1e-12;

  MembershipResult out;
  double winding = 0.0;
  Complex q_prev{};
  Complex q_first{};
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) /
        static_cast<double>(samples);
    const Complex z = std::polar(radius, theta);
    const Complex qz = q.evaluate(z);
    if (std::abs(qz) < kPoleTol) {
      std::ostringstream why;
      why << "z/f(z) vanishes near z = " << z << " (f has a pole)";
      out.member = false;
      out.max_deviation = std::numeric_limits<double>::infinity();
      out.margin = -std::numeric_limits<double>::infinity();
      out.diagnostic = why.str();
      return out;
    }
    const Complex f = z / qz;
    const Complex fp = (qz - z * q.evaluate_derivative(z)) / (qz * qz);
    const Complex zf = z / f;
    out.max_deviation = std::max(out.max_deviation, std::abs(zf * zf * fp - 1.0));
    if (k == 0) {
      q_first = qz;
    } else {
      winding += std::arg(qz / q_prev);
    }
    q_prev = qz;
  }
  winding += std::arg(q_first / q_prev);
  const long turns = std::lround(winding / (2.0 * std::numbers::pi));

  out.margin = 1.0 - out.max_deviation;
  if (turns != 0) {
    std::ostringstream why;
    why << "z/f(z) has " << turns
        << " zero(s) inside the sampled circle (f is not analytic there)";
    out.member = false;
    out.diagnostic = why.str();
    return out;
  }
  out.member = out.max_deviation < 1.0;
  if (!out.member) {
    std::ostringstream why;
    why << "max |(z/f)^2 f' - 1| = " << out.max_deviation << " >= 1";
    out.diagnostic = why.str();
  }
  return out;
}

} // namespace hankelkit::series
