#pragma once

// Truncated complex power series about the origin.
//
// A TruncatedSeries of order N stores c_0..c_N and stands for
// sum_{k<=N} c_k z^k. Binary operations on series of different orders
// truncate to the smaller order: coefficients beyond an operand's order are
// unknown, not zero.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "schlicht/complex.hpp"

namespace schlicht {

inline constexpr int kDefaultOrder = 64;

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order = 0);
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  /// The monomial z^power truncated at order (zero if power > order).
  static TruncatedSeries monomial(int power, int order, Complex scale = 1.0);
  /// sum_k ratio^k z^k.
  static TruncatedSeries geometric(Complex ratio, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Returns a copy truncated (never extended) to the given order.
  TruncatedSeries truncated(int order) const;
  /// Multiplies by z: order grows by one, the new constant term is 0.
  TruncatedSeries shifted_up() const;
  /// Divides by z; requires c_0 == 0. Order drops by one.
  TruncatedSeries shifted_down() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(Complex scale);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, Complex s) { return a *= s; }
  friend TruncatedSeries operator*(Complex s, TruncatedSeries a) { return a *= s; }

  /// Mutable access for builders; finiteness is checked by the ops that consume it.
  Complex& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

 private:
  std::vector<Complex> coeffs_;
};

/// Square grid of coefficients; entry (n, m) multiplies z^n u^m.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order = 0);

  int order() const noexcept { return order_; }
  Complex operator()(int n, int m) const { return data_.at(index(n, m)); }
  Complex& at(int n, int m) { return data_.at(index(n, m)); }

  /// Row n as a series in u (order = order()).
  TruncatedSeries row(int n) const;
  void set_row(int n, const TruncatedSeries& series);

  Complex evaluate(Complex z, Complex u) const;

 private:
  std::size_t index(int n, int m) const;

  int order_;
  std::vector<Complex> data_;
};

struct SeriesValue {
  Complex value;
  /// |c_N| |z|^N / (1 - |z|); +inf when |z| >= 1.
  double tail_bound;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
TruncatedSeries series_log(const TruncatedSeries& a);
TruncatedSeries series_exp(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, double alpha);
TruncatedSeries series_derivative(const TruncatedSeries& a);
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
SeriesValue series_eval(const TruncatedSeries& a, Complex z);

/// Taylor coefficients from M uniform samples on |z| = rho (trapezoid rule).
/// The aliasing error on c_k is of order |c_{k+M}| rho^M, while rounding in
/// the samples is amplified by rho^{-k}; large orders want rho close to 1.
TruncatedSeries series_from_samples(const std::function<Complex(Complex)>& evaluator,
                                    double rho, int sample_count, int order);

/// log of a bivariate series whose (0,0) coefficient is off the branch cut.
/// Uses the z-direction recurrence b' = a'/a with row series in u as scalars.
BivariateSeries bivariate_log(const BivariateSeries& a);
BivariateSeries bivariate_exp(const BivariateSeries& a);

}  // namespace schlicht
