#include "schlicht/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "schlicht/error.hpp"

namespace schlicht {

namespace {

void require_finite(std::span<const Complex> coeffs, const char* what) {
  for (const Complex& c : coeffs) {
    if (!is_finite(c)) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite coefficient");
    }
  }
}

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  require_finite(coeffs_, "TruncatedSeries");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::monomial(int power, int order, Complex scale) {
  TruncatedSeries s(order);
  if (power >= 0 && power <= order) s.at(power) = scale;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(Complex ratio, int order) {
  TruncatedSeries s(order);
  Complex p = 1.0;
  for (int k = 0; k <= order; ++k) {
    s.at(k) = p;
    p *= ratio;
  }
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  const int keep = std::min(order, this->order());
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + keep + 1));
}

TruncatedSeries TruncatedSeries::shifted_up() const {
  std::vector<Complex> c(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shifted_down() const {
  if (coeffs_.front() != Complex{}) {
    throw Error(ErrorCode::InvalidArgument, "shifted_down needs a zero constant term");
  }
  if (order() == 0) return TruncatedSeries(0);
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(min_order(*this, other)) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(min_order(*this, other)) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) {
  for (Complex& c : coeffs_) c *= scale;
  return *this;
}

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  const auto side = static_cast<std::size_t>(order) + 1;
  data_.assign(side * side, Complex{});
}

std::size_t BivariateSeries::index(int n, int m) const {
  if (n < 0 || m < 0 || n > order_ || m > order_) {
    throw Error(ErrorCode::InvalidArgument, "bivariate index out of range");
  }
  return static_cast<std::size_t>(n) * (static_cast<std::size_t>(order_) + 1) +
         static_cast<std::size_t>(m);
}

TruncatedSeries BivariateSeries::row(int n) const {
  const std::size_t base = index(n, 0);
  return TruncatedSeries(
      std::vector<Complex>(data_.begin() + static_cast<std::ptrdiff_t>(base),
                           data_.begin() + static_cast<std::ptrdiff_t>(base) + order_ + 1));
}

void BivariateSeries::set_row(int n, const TruncatedSeries& series) {
  for (int m = 0; m <= order_; ++m) at(n, m) = m <= series.order() ? series[m] : Complex{};
}

Complex BivariateSeries::evaluate(Complex z, Complex u) const {
  Complex total = 0.0;
  for (int n = order_; n >= 0; --n) {
    Complex row_value = 0.0;
    for (int m = order_; m >= 0; --m) row_value = row_value * u + (*this)(n, m);
    total = total * z + row_value;
  }
  return total;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = min_order(a, b);
  TruncatedSeries out(order);
  for (int k = 0; k <= order; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += a[j] * b[k - j];
    out.at(k) = sum;
  }
  return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const Complex a0 = a[0];
  if (a0 == Complex{}) throw Error(ErrorCode::ZeroConstantTerm, "series_reciprocal");
  const int order = a.order();
  TruncatedSeries b(order);
  b.at(0) = 1.0 / a0;
  for (int k = 1; k <= order; ++k) {
    Complex sum = 0.0;
    for (int j = 1; j <= k; ++j) sum += a[j] * b[k - j];
    b.at(k) = -sum / a0;
  }
  return b;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  const Complex a0 = a[0];
  if (on_branch_cut(a0)) throw Error(ErrorCode::BranchCut, "series_log: constant term on (-inf, 0]");
  const int order = a.order();
  TruncatedSeries b(order);
  b.at(0) = std::log(a0);
  // a b' = a'  =>  k a0 b_k = k a_k - sum_{j=1}^{k-1} (k-j) b_{k-j} a_j
  for (int k = 1; k <= order; ++k) {
    Complex sum = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) sum -= static_cast<double>(k - j) * b[k - j] * a[j];
    b.at(k) = sum / (static_cast<double>(k) * a0);
  }
  return b;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  const int order = a.order();
  TruncatedSeries b(order);
  b.at(0) = std::exp(a[0]);
  // b' = a' b  =>  k b_k = sum_{j=1}^{k} j a_j b_{k-j}
  for (int k = 1; k <= order; ++k) {
    Complex sum = 0.0;
    for (int j = 1; j <= k; ++j) sum += static_cast<double>(j) * a[j] * b[k - j];
    b.at(k) = sum / static_cast<double>(k);
  }
  return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, double alpha) {
  const Complex a0 = a[0];
  if (on_branch_cut(a0)) throw Error(ErrorCode::BranchCut, "series_pow: constant term on (-inf, 0]");
  const int order = a.order();
  TruncatedSeries b(order);
  b.at(0) = std::exp(alpha * std::log(a0));
  // a b' = alpha a' b  =>  k a0 b_k = sum_{j=1}^{k} (alpha j - (k - j)) a_j b_{k-j}
  for (int k = 1; k <= order; ++k) {
    Complex sum = 0.0;
    for (int j = 1; j <= k; ++j) {
      sum += (alpha * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * b[k - j];
    }
    b.at(k) = sum / (static_cast<double>(k) * a0);
  }
  return b;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(a.order() - 1);
  for (int k = 1; k <= a.order(); ++k) d.at(k - 1) = static_cast<double>(k) * a[k];
  return d;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != Complex{}) throw Error(ErrorCode::NonzeroInnerConstant, "series_compose");
  const int order = min_order(outer, inner);
  const TruncatedSeries w = inner.truncated(order);
  // Horner in the outer variable: (((c_N) w + c_{N-1}) w + ...) + c_0.
  TruncatedSeries acc(order);
  for (int k = outer.order(); k >= 0; --k) {
    acc = series_mul(acc, w);
    acc.at(0) += outer[k];
  }
  return acc;
}

SeriesValue series_eval(const TruncatedSeries& a, Complex z) {
  Complex value = 0.0;
  for (int k = a.order(); k >= 0; --k) value = value * z + a[k];
  const double r = std::abs(z);
  double tail = std::numeric_limits<double>::infinity();
  if (r < 1.0) tail = std::abs(a[a.order()]) * std::pow(r, a.order()) / (1.0 - r);
  return {value, tail};
}

TruncatedSeries series_from_samples(const std::function<Complex(Complex)>& evaluator, double rho,
                                    int sample_count, int order) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::DegenerateRadius, "rho must lie in (0, 1)");
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  if (sample_count <= 2 * order || sample_count < 1 ||
      !std::has_single_bit(static_cast<unsigned>(sample_count))) {
    throw Error(ErrorCode::InvalidArgument, "sample count must be a power of two exceeding 2*order");
  }
  const auto m = static_cast<std::size_t>(sample_count);
  std::vector<Complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
    samples[j] = evaluator(rho * unit(theta));
    if (!is_finite(samples[j])) {
      throw Error(ErrorCode::EvaluationFailure, "series_from_samples: evaluator returned non-finite value");
    }
  }
  TruncatedSeries out(order);
  double rho_k = 1.0;
  for (int k = 0; k <= order; ++k) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      // exact index reduction keeps the twiddle angle in [0, 2pi)
      const std::size_t idx = (j * static_cast<std::size_t>(k)) % m;
      sum += samples[j] * unit(-2.0 * kPi * static_cast<double>(idx) / static_cast<double>(m));
    }
    out.at(k) = sum / (static_cast<double>(m) * rho_k);
    rho_k *= rho;
  }
  return out;
}

namespace {

BivariateSeries rows_to_grid(const std::vector<TruncatedSeries>& rows, int order) {
  BivariateSeries out(order);
  for (int n = 0; n <= order; ++n) out.set_row(n, rows[static_cast<std::size_t>(n)]);
  return out;
}

}  // namespace

BivariateSeries bivariate_log(const BivariateSeries& a) {
  const int order = a.order();
  std::vector<TruncatedSeries> rows;
  rows.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) rows.push_back(a.row(n));

  const TruncatedSeries inv_a0 = series_reciprocal(rows[0]);
  std::vector<TruncatedSeries> out(static_cast<std::size_t>(order) + 1, TruncatedSeries(order));
  out[0] = series_log(rows[0]);
  for (int k = 1; k <= order; ++k) {
    TruncatedSeries sum = rows[static_cast<std::size_t>(k)] * static_cast<double>(k);
    for (int j = 1; j < k; ++j) {
      sum -= series_mul(out[static_cast<std::size_t>(k - j)], rows[static_cast<std::size_t>(j)]) *
             static_cast<double>(k - j);
    }
    out[static_cast<std::size_t>(k)] = series_mul(sum, inv_a0) * (1.0 / static_cast<double>(k));
  }
  return rows_to_grid(out, order);
}

BivariateSeries bivariate_exp(const BivariateSeries& a) {
  const int order = a.order();
  std::vector<TruncatedSeries> rows;
  rows.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) rows.push_back(a.row(n));

  std::vector<TruncatedSeries> out(static_cast<std::size_t>(order) + 1, TruncatedSeries(order));
  out[0] = series_exp(rows[0]);
  for (int k = 1; k <= order; ++k) {
    TruncatedSeries sum(order);
    for (int j = 1; j <= k; ++j) {
      sum += series_mul(rows[static_cast<std::size_t>(j)], out[static_cast<std::size_t>(k - j)]) *
             static_cast<double>(j);
    }
    out[static_cast<std::size_t>(k)] = sum * (1.0 / static_cast<double>(k));
  }
  return rows_to_grid(out, order);
}

}  // namespace schlicht
