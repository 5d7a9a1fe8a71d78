#include "hankelkit/series.hpp"

#include <algorithm>
#include <cmath>

namespace hankelkit::series {

namespace {

constexpr double kUnitConstantTol = 1e-12;

void require_same_order(const PowerSeries& a, const PowerSeries& b,
                        const char* op) {
  if (a.order() != b.order()) {
    throw SeriesError(std::string(op) + ": order mismatch (" +
                      std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + ")");
  }
}

void require_unit_constant(const PowerSeries& a, const char* op) {
  if (std::abs(a[0] - Complex{1.0, 0.0}) > kUnitConstantTol) {
    throw SeriesError(std::string(op) + ": constant term must be 1");
  }
}

} // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw SeriesError("PowerSeries: at least one coefficient is required");
  }
}

PowerSeries::PowerSeries(std::initializer_list<Complex> coeffs)
    : PowerSeries(std::vector<Complex>(coeffs)) {}

PowerSeries PowerSeries::constant(Complex value, std::size_t order) {
  PowerSeries s(order);
  s[0] = value;
  return s;
}

PowerSeries PowerSeries::from_taylor(std::span<const Complex> a) {
  std::vector<Complex> c(a.size() + 1);
  std::copy(a.begin(), a.end(), c.begin() + 1);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::from_taylor(std::initializer_list<Complex> a) {
  return from_taylor(std::span<const Complex>(a.begin(), a.size()));
}

PowerSeries PowerSeries::with_order(std::size_t order) const {
  std::vector<Complex> c(order + 1);
  const std::size_t n = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, c.begin());
  return PowerSeries(std::move(c));
}

Complex PowerSeries::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Complex PowerSeries::evaluate_derivative(Complex z) const noexcept {
  Complex acc{};
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    acc = acc * z + static_cast<double>(k) * coeffs_[k];
  }
  return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  require_same_order(*this, rhs, "operator+");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  require_same_order(*this, rhs, "operator-");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex scalar) noexcept {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries series_recip(const PowerSeries& a) {
  if (a[0] == Complex{}) {
    throw SeriesError("series_recip: zero constant term");
  }
  const std::size_t n = a.order();
  PowerSeries r(n);
  const Complex inv0 = 1.0 / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  require_unit_constant(a, "series_sqrt");
  const std::size_t n = a.order();
  PowerSeries s(n);
  s[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j < k; ++j) acc += s[j] * s[k - j];
    s[k] = (a[k] - acc) / 2.0;
  }
  return s;
}

PowerSeries series_log(const PowerSeries& a) {
  require_unit_constant(a, "series_log");
  // a l' = a', so k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}.
  const std::size_t n = a.order();
  PowerSeries l(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) {
      acc -= static_cast<double>(j) * l[j] * a[k - j];
    }
    l[k] = acc / static_cast<double>(k);
  }
  return l;
}

PowerSeries series_exp(const PowerSeries& l) {
  const std::size_t n = l.order();
  PowerSeries e(n);
  e[0] = std::exp(l[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) {
      acc += static_cast<double>(j) * l[j] * e[k - j];
    }
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

PowerSeries series_derivative(const PowerSeries& a) {
  PowerSeries d(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    d[k - 1] = static_cast<double>(k) * a[k];
  }
  return d;
}

PowerSeries substitute_square(const PowerSeries& a) {
  PowerSeries r(a.order());
  for (std::size_t k = 0; 2 * k <= a.order(); ++k) r[2 * k] = a[k];
  return r;
}

PowerSeries rotate(const PowerSeries& f, double theta) {
  PowerSeries r(f.order());
  for (std::size_t k = 0; k <= f.order(); ++k) {
    const double phase = (static_cast<double>(k) - 1.0) * theta;
    r[k] = f[k] * std::polar(1.0, phase);
  }
  return r;
}

double max_abs_difference(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "max_abs_difference");
  double m = 0.0;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    m = std::max(m, std::abs(a[k] - b[k]));
  }
  return m;
}

} // namespace hankelkit::series
