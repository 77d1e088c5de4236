#pragma once

// Grunsky coefficients d_{n,m}: the Taylor coefficients of
//   log((f(z) - f(u)) / (z - u)) = sum_{n,m >= 0} d_{n,m} z^n u^m
// together with the Grunsky inequality and the kernel bound
//   |sum n m d_{n,m} z^{n-1} u^{m-1}| <= 1 / ((1 - |z|^2)(1 - |u|^2))
// that holds for univalent f.

#include <span>

#include "schlicht/catalog.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Coefficients of (f(z) - f(u)) / (z - u) = sum_k a_k sum_{i+j=k-1} z^i u^j.
/// `f_series` must be normalized (c_0 = 0, c_1 = 1) and of order >= 2*order + 1.
BivariateSeries divided_difference_series(const TruncatedSeries& f_series, int order);
BivariateSeries divided_difference_series(const AnalyticFunction& f, int order);

struct GrunskyTable {
  int order = 0;
  BivariateSeries d;
  bool symmetric = false;  // |d_{n,m} - d_{m,n}| <= 1e-10 everywhere

  Complex operator()(int n, int m) const { return d(n, m); }
};

GrunskyTable grunsky_table(const AnalyticFunction& f, int order);
GrunskyTable grunsky_table(const TruncatedSeries& f_series, int order);

struct BoundCheck {
  double lhs;
  double rhs;
  bool holds;
};

/// lhs = sum_{n=1}^{N} n |sum_{m=1}^{M} d_{n,m} x_m|^2, rhs = sum_{n=1}^{M} |x_n|^2 / n,
/// with x[0] holding x_1. Truncating the outer sum at N only drops
/// nonnegative terms, so a violation here is a genuine violation.
BoundCheck grunsky_inequality_check(const GrunskyTable& table, std::span<const Complex> x);

/// sum_{n,m=1}^{N} n m d_{n,m} z^{n-1} u^{m-1}
Complex kernel_partial_sum(const GrunskyTable& table, Complex z, Complex u);

/// |kernel_partial_sum| against 1/((1-|z|^2)(1-|u|^2)) with slack 1e-6.
/// Requires |z|, |u| <= 0.9 so the truncation tail stays controlled.
BoundCheck kernel_bound_check(const GrunskyTable& table, Complex z, Complex u);

}  // namespace schlicht
