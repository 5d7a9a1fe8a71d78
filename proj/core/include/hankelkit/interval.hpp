/**
 * @file interval.hpp
 * @brief Closed real intervals with outward-padded endpoints.
 *
 * The rounding mode is never changed. Instead every computed endpoint is
 * pushed outward by kPadUlps units in the last place, which dominates the
 * half-ulp error of round-to-nearest for each elementary operation, so the
 * true range is always enclosed. std::sqrt is correctly rounded (IEEE 754),
 * so the same padding covers it.
 *
 * An interval with lo > hi is empty; operations on empty operands yield
 * empty results.
 */
#ifndef HANKELKIT_INTERVAL_HPP
#define HANKELKIT_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hankelkit::opt {

inline constexpr int kPadUlps = 4;

class Interval {
public:
  constexpr Interval() noexcept : lo_(0.0), hi_(0.0) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Interval(double v) noexcept : lo_(v), hi_(v) {}
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi or NaN");
  }

  static constexpr Interval empty() noexcept {
    return Interval(Unchecked{}, std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity());
  }
  static constexpr Interval entire() noexcept {
    return Interval(Unchecked{}, -std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity());
  }
  /// Builds [lo, hi] without validation; lo > hi gives an empty interval.
  static constexpr Interval raw(double lo, double hi) noexcept {
    return (lo <= hi) ? Interval(Unchecked{}, lo, hi) : empty();
  }
  /// Smallest padded interval guaranteed to contain the real value that
  /// `v` approximates to within half an ulp.
  static Interval around(double v) noexcept { return padded(v, v); }

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }
  constexpr bool is_empty() const noexcept { return lo_ > hi_; }
  bool is_finite() const noexcept {
    return std::isfinite(lo_) && std::isfinite(hi_);
  }
  constexpr double width() const noexcept {
    return is_empty() ? 0.0 : hi_ - lo_;
  }
  constexpr double mid() const noexcept { return 0.5 * lo_ + 0.5 * hi_; }
  constexpr bool contains(double x) const noexcept {
    return lo_ <= x && x <= hi_;
  }
  constexpr bool contains(const Interval& o) const noexcept {
    return o.is_empty() || (lo_ <= o.lo_ && o.hi_ <= hi_);
  }

  /// Pushes lo down and hi up by kPadUlps ulps. NaN endpoints (from
  /// inf - inf) widen to the corresponding infinity.
  static Interval padded(double lo, double hi) noexcept {
    if (std::isnan(lo)) lo = -std::numeric_limits<double>::infinity();
    if (std::isnan(hi)) hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kPadUlps; ++i) {
      lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
      hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    return raw(lo, hi);
  }

  friend Interval operator+(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty() || b.is_empty()) return empty();
    return padded(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty() || b.is_empty()) return empty();
    return padded(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(const Interval& a) noexcept {
    if (a.is_empty()) return empty();
    return raw(-a.hi_, -a.lo_);
  }
  friend Interval operator*(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty() || b.is_empty()) return empty();
    if (!a.is_finite() || !b.is_finite()) return entire();
    const double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_,
                 p4 = a.hi_ * b.hi_;
    return padded(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend Interval operator/(const Interval& a, const Interval& b) noexcept {
    if (a.is_empty() || b.is_empty()) return empty();
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) return entire();
    if (!a.is_finite() || !b.is_finite()) return entire();
    const double q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_, q3 = a.hi_ / b.lo_,
                 q4 = a.hi_ / b.hi_;
    return padded(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
  }

  Interval& operator+=(const Interval& o) noexcept { return *this = *this + o; }
  Interval& operator-=(const Interval& o) noexcept { return *this = *this - o; }
  Interval& operator*=(const Interval& o) noexcept { return *this = *this * o; }
  Interval& operator/=(const Interval& o) noexcept { return *this = *this / o; }

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return (a.is_empty() && b.is_empty()) || (a.lo_ == b.lo_ && a.hi_ == b.hi_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    if (x.is_empty()) return os << "[empty]";
    return os << '[' << x.lo_ << ", " << x.hi_ << ']';
  }

private:
  struct Unchecked {};
  constexpr Interval(Unchecked, double lo, double hi) noexcept
      : lo_(lo), hi_(hi) {}

  double lo_;
  double hi_;
};

/// Intersection.
inline Interval operator&(const Interval& a, const Interval& b) noexcept {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval::raw(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

/// Convex hull.
inline Interval hull(const Interval& a, const Interval& b) noexcept {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval::raw(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

namespace detail {

// Enclosure of x^n for a point x, n >= 1.
inline Interval point_pow(double x, int n) noexcept {
  Interval r(x);
  for (int i = 1; i < n; ++i) r = r * Interval(x);
  return r;
}

} // namespace detail

/// Integer power, n >= 0. Uses monotonicity on each sign-definite piece so
/// that x^n is not computed as the n-fold product of x with itself.
inline Interval pow(const Interval& a, int n) noexcept {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (a.is_empty()) return Interval::empty();
  if (n == 0) return Interval(1.0);
  if (n == 1) return a;
  if (!a.is_finite()) {
    return (n % 2 == 0) ? Interval::raw(0.0, kInf) : Interval::entire();
  }
  const Interval pl = detail::point_pow(a.lo(), n);
  const Interval ph = detail::point_pow(a.hi(), n);
  if (n % 2 == 1) return Interval::raw(pl.lo(), ph.hi());
  if (a.lo() >= 0.0) return Interval::raw(std::max(0.0, pl.lo()), ph.hi());
  if (a.hi() <= 0.0) return Interval::raw(std::max(0.0, ph.lo()), pl.hi());
  return Interval::raw(0.0, std::max(pl.hi(), ph.hi()));
}

inline Interval sqr(const Interval& a) noexcept { return pow(a, 2); }

/// Square root with the lower radicand bound clamped at 0; empty when the
/// whole radicand is negative.
inline Interval sqrt(const Interval& a) noexcept {
  if (a.is_empty() || a.hi() < 0.0) return Interval::empty();
  const double l = a.lo() > 0.0 ? std::sqrt(a.lo()) : 0.0;
  const double h = std::sqrt(a.hi());
  return Interval::raw(std::max(0.0, Interval::padded(l, l).lo()),
                       Interval::padded(h, h).hi());
}

} // namespace hankelkit::opt

#endif // HANKELKIT_INTERVAL_HPP
