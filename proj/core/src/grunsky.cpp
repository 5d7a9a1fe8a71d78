#include "hankelkit/grunsky.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hankelkit::series {

GrunskyTable::GrunskyTable(std::size_t cutoff)
    : cutoff_(cutoff), side_((cutoff + 1) / 2) {
  if (cutoff == 0 || cutoff % 2 == 0) {
    throw SeriesError("GrunskyTable: cutoff must be odd and >= 1");
  }
  values_.assign(side_ * side_, Complex{});
}

std::size_t GrunskyTable::slot(std::size_t p, std::size_t q) const {
  if (p % 2 == 0 || q % 2 == 0 || p > cutoff_ || q > cutoff_) {
    throw SeriesError("GrunskyTable: no entry (" + std::to_string(p) + "," +
                      std::to_string(q) + ") in a table with cutoff " +
                      std::to_string(cutoff_));
  }
  return (p / 2) * side_ + (q / 2);
}

Complex GrunskyTable::operator()(std::size_t p, std::size_t q) const {
  return values_[slot(p, q)];
}

void GrunskyTable::set_entry(std::size_t p, std::size_t q, Complex value) {
  values_[slot(p, q)] = value;
}

void GrunskyTable::set_symmetric(std::size_t p, std::size_t q, Complex value) {
  values_[slot(p, q)] = value;
  values_[slot(q, p)] = value;
}

double GrunskyTable::symmetry_defect() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = i + 1; j < side_; ++j) {
      m = std::max(m, std::abs(values_[i * side_ + j] - values_[j * side_ + i]));
    }
  }
  return m;
}

double GrunskyTable::weighted_first_row_sum() const {
  double s = 0.0;
  for (std::size_t q = 1; q <= std::min<std::size_t>(cutoff_, 7); q += 2) {
    s += static_cast<double>(q) * std::norm((*this)(1, q));
  }
  return s;
}

PowerSeries square_root_transform(const PowerSeries& f, std::size_t order) {
  if (f.order() < 1 || f[0] != Complex{} ||
      std::abs(f[1] - Complex{1.0, 0.0}) > 1e-12) {
    throw SeriesError("square_root_transform: f must satisfy f(0)=0, f'(0)=1");
  }
  // F(z) = z * sqrt(g(z^2)) with g(w) = f(w)/w.
  const std::size_t inner = order >= 1 ? order - 1 : 0;
  PowerSeries g(inner);
  for (std::size_t k = 0; k <= inner && k + 1 <= f.order(); ++k) {
    g[k] = f[k + 1];
  }
  if (2 * (f.order() - 1) < inner) {
    throw SeriesError("square_root_transform: f has insufficient order");
  }
  const PowerSeries s = series_sqrt(substitute_square(g));
  PowerSeries out(order);
  for (std::size_t k = 1; k <= order; ++k) out[k] = s[k - 1];
  return out;
}

GrunskyTable grunsky_table(const PowerSeries& f, std::size_t cutoff) {
  if (cutoff == 0 || cutoff % 2 == 0) {
    throw SeriesError("grunsky_table: cutoff must be odd and >= 1");
  }
  if (f.order() < 2 * cutoff + 2) {
    throw SeriesError("grunsky_table: series order " +
                      std::to_string(f.order()) + " < 2*cutoff+2 = " +
                      std::to_string(2 * cutoff + 2));
  }
  const std::size_t n = cutoff;
  const PowerSeries b = square_root_transform(f, 2 * n + 1);

  // h_i(z) = sum_m b_{i+m+1} z^m for i, m <= n.
  std::vector<PowerSeries> h;
  h.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    PowerSeries hi(n);
    for (std::size_t m = 0; m <= n; ++m) hi[m] = b[i + m + 1];
    h.push_back(std::move(hi));
  }

  const PowerSeries h0_inv = series_recip(h[0]);
  std::vector<PowerSeries> L;
  L.reserve(n + 1);
  L.push_back(series_log(h[0]));
  for (std::size_t i = 1; i <= n; ++i) {
    PowerSeries acc = h[i] * Complex(static_cast<double>(i));
    for (std::size_t k = 1; k < i; ++k) {
      acc -= series_mul(L[k], h[i - k]) * Complex(static_cast<double>(k));
    }
    L.push_back(series_mul(acc, h0_inv) * Complex(1.0 / static_cast<double>(i)));
  }

  GrunskyTable table(cutoff);
  for (std::size_t p = 1; p <= n; p += 2) {
    for (std::size_t q = 1; q <= n; q += 2) table.set_entry(p, q, L[p][q]);
  }
  return table;
}

std::array<Complex, 6> verify_grunsky_identities(const GrunskyTable& table,
                                                 const PowerSeries& a) {
  if (table.cutoff() < 7) {
    throw SeriesError("verify_grunsky_identities: table must reach index 7");
  }
  if (a.order() < 5) {
    throw SeriesError("verify_grunsky_identities: need a_2..a_5");
  }
  const Complex w11 = table(1, 1), w13 = table(1, 3), w15 = table(1, 5),
                w17 = table(1, 7), w33 = table(3, 3), w35 = table(3, 5);
  const Complex w11sq = w11 * w11, w11cu = w11sq * w11, w11qu = w11cu * w11;
  return {
      2.0 * w11 - a[2],
      2.0 * w13 + 3.0 * w11sq - a[3],
      2.0 * w33 + 8.0 * w11 * w13 + (10.0 / 3.0) * w11cu - a[4],
      2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13 * w13 + 18.0 * w11sq * w13 +
          (7.0 / 3.0) * w11qu - a[5],
      3.0 * w15 - 3.0 * w11 * w13 + w11cu - 3.0 * w33,
      w17 - w35 - w11 * w33 - w13 * w13 + w11qu / 3.0,
  };
}

GrunskyFunctional grunsky_functional(const GrunskyTable& table,
                                     std::span<const Complex> x) {
  const std::size_t terms = (table.cutoff() + 1) / 2;
  auto x_at = [&](std::size_t j) { return j < x.size() ? x[j] : Complex{}; };
  GrunskyFunctional out;
  for (std::size_t qi = 0; qi < terms; ++qi) {
    const std::size_t q = 2 * qi + 1;
    Complex inner{};
    for (std::size_t pi = 0; pi < terms; ++pi) {
      inner += table(2 * pi + 1, q) * x_at(pi);
    }
    out.lhs += static_cast<double>(q) * std::norm(inner);
  }
  for (std::size_t pi = 0; pi < terms; ++pi) {
    out.rhs += std::norm(x_at(pi)) / static_cast<double>(2 * pi + 1);
  }
  return out;
}

} // namespace hankelkit::series
