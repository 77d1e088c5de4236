#include "schlicht/grunsky.hpp"

#include <cmath>

#include "schlicht/error.hpp"

namespace schlicht {

namespace {
constexpr double kSymmetryTol = 1e-10;
constexpr double kGrunskySlack = 1e-10;
constexpr double kKernelSlack = 1e-6;
}  // namespace

BivariateSeries divided_difference_series(const TruncatedSeries& f_series, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  if (f_series.order() < 2 * order + 1) {
    throw Error(ErrorCode::InvalidArgument, "f series must have order >= 2*order + 1");
  }
  if (std::abs(f_series[0]) > 1e-8 || std::abs(f_series[1] - 1.0) > 1e-8) {
    throw Error(ErrorCode::InvalidArgument, "f series is not normalized (c0 = 0, c1 = 1)");
  }
  BivariateSeries out(order);
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= order; ++m) out.at(n, m) = f_series[n + m + 1];
  }
  return out;
}

BivariateSeries divided_difference_series(const AnalyticFunction& f, int order) {
  return divided_difference_series(series_of(f, 2 * order + 1), order);
}

GrunskyTable grunsky_table(const TruncatedSeries& f_series, int order) {
  GrunskyTable table{order, bivariate_log(divided_difference_series(f_series, order)), true};
  for (int n = 0; n <= order && table.symmetric; ++n) {
    for (int m = n + 1; m <= order; ++m) {
      if (std::abs(table.d(n, m) - table.d(m, n)) > kSymmetryTol) {
        table.symmetric = false;
        break;
      }
    }
  }
  return table;
}

GrunskyTable grunsky_table(const AnalyticFunction& f, int order) {
  return grunsky_table(series_of(f, 2 * order + 1), order);
}

BoundCheck grunsky_inequality_check(const GrunskyTable& table, std::span<const Complex> x) {
  const int m_len = static_cast<int>(x.size());
  if (m_len == 0 || m_len > table.order) {
    throw Error(ErrorCode::DimensionMismatch, "x must have length in [1, table order]");
  }
  double lhs = 0.0;
  for (int n = 1; n <= table.order; ++n) {
    Complex inner = 0.0;
    for (int m = 1; m <= m_len; ++m) inner += table(n, m) * x[static_cast<std::size_t>(m - 1)];
    lhs += n * std::norm(inner);
  }
  double rhs = 0.0;
  for (int n = 1; n <= m_len; ++n) rhs += std::norm(x[static_cast<std::size_t>(n - 1)]) / n;
  return {lhs, rhs, lhs <= rhs + kGrunskySlack};
}

Complex kernel_partial_sum(const GrunskyTable& table, Complex z, Complex u) {
  // Horner in both variables over the (n m d_{n,m}) grid.
  Complex total = 0.0;
  for (int n = table.order; n >= 1; --n) {
    Complex row = 0.0;
    for (int m = table.order; m >= 1; --m) row = row * u + static_cast<double>(n * m) * table(n, m);
    total = total * z + row;
  }
  return total;
}

BoundCheck kernel_bound_check(const GrunskyTable& table, Complex z, Complex u) {
  if (std::abs(z) > 0.9 || std::abs(u) > 0.9) {
    throw Error(ErrorCode::InvalidArgument, "kernel bound check needs |z|, |u| <= 0.9");
  }
  const double lhs = std::abs(kernel_partial_sum(table, z, u));
  const double rhs = 1.0 / ((1.0 - std::norm(z)) * (1.0 - std::norm(u)));
  return {lhs, rhs, lhs <= rhs + kKernelSlack};
}

}  // namespace schlicht
