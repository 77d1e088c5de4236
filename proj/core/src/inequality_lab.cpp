#include "schlicht/inequality_lab.hpp"

#include <algorithm>
#include <cmath>

#include "schlicht/complex.hpp"
#include "schlicht/error.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/parallel.hpp"

namespace schlicht {

namespace {
constexpr double kIdentitySlack = 1e-12;
constexpr double kScanSlack = 1e-9;
constexpr double kPoleTube = 1e-9;

void require_n(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
}

// Per-n scans fill their own slot, then merge in n order.
template <class Scan, class Better>
ScanOutcome scan_over_n(const ScalarScanConfig& config, Scan scan, Better better) {
  config.validate();
  const auto count = static_cast<std::size_t>(config.n_max - config.n_min + 1);
  std::vector<ScanOutcome> parts(count);
  parallel_for(count, [&](std::size_t k) { parts[k] = scan(config.n_min + static_cast<int>(k)); });

  ScanOutcome merged = parts.front();
  for (std::size_t k = 1; k < count; ++k) {
    ScanOutcome& p = parts[k];
    if (better(p.extremum, merged.extremum)) {
      merged.extremum = p.extremum;
      merged.arg_n = p.arg_n;
      merged.arg_a = p.arg_a;
      merged.arg_b = p.arg_b;
    }
    merged.violations.insert(merged.violations.end(), p.violations.begin(), p.violations.end());
    if (p.closest_pole && (!merged.closest_pole || *p.closest_pole < *merged.closest_pole)) {
      merged.closest_pole = p.closest_pole;
    }
    merged.excluded += p.excluded;
  }
  return merged;
}

}  // namespace

GValues g_family(double phi, int n) {
  require_n(n);
  if (!(phi >= 0.0 && phi < kPi / 2)) throw Error(ErrorCode::InvalidArgument, "phi must lie in [0, pi/2)");
  const double nd = n;
  const double c2 = 2.0 * std::cos(phi);
  const double s = std::sin(phi);
  const double g = std::pow(c2, 2.0 / nd - 1.0) * s - std::sin(2.0 * phi / nd);
  const double g1 = 2.0 * std::pow(c2, 2.0 / nd - 2.0) * (1.0 - (2.0 / nd) * s * s) -
                    (2.0 / nd) * std::cos(2.0 * phi / nd);
  const double g2 = 8.0 * std::pow(c2, 2.0 / nd - 3.0) * ((1.0 - 3.0 / nd) * s + (2.0 / (nd * nd)) * s * s * s) +
                    (4.0 / (nd * nd)) * std::sin(2.0 * phi / nd);
  return {g, g1, g2};
}

double g_prime_at_zero(int n) {
  require_n(n);
  return 2.0 * (std::pow(2.0, 2.0 / n - 2.0) - 1.0 / n);
}

void ScalarScanConfig::validate() const {
  if (n_min < 2 || n_max < n_min) throw Error(ErrorCode::InvalidArgument, "n range must satisfy 2 <= n_min <= n_max");
  if (phi_count < 1 || x_count < 1 || x_tail_count < 0) throw Error(ErrorCode::InvalidArgument, "grids must be nonempty");
  if (!(x_max > 0.0) || (x_tail_count > 0 && !(x_tail_max > x_max))) {
    throw Error(ErrorCode::InvalidArgument, "x grid bounds must satisfy 0 < x_max < x_tail_max");
  }
  if (y_offsets.empty()) throw Error(ErrorCode::InvalidArgument, "y offsets must be nonempty");
  for (double dy : y_offsets) {
    if (dy > 0.0) throw Error(ErrorCode::InvalidArgument, "y offsets must be <= 0");
  }
}

std::vector<double> ScalarScanConfig::phi_grid() const {
  std::vector<double> grid(static_cast<std::size_t>(phi_count));
  const double step = (kPi / 2) / phi_count;
  for (int j = 0; j < phi_count; ++j) grid[static_cast<std::size_t>(j)] = step * j;
  return grid;
}

std::vector<double> ScalarScanConfig::x_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(x_count + x_tail_count));
  for (int j = 0; j < x_count; ++j) grid.push_back(x_max * j / (x_count - 1 > 0 ? x_count - 1 : 1));
  const double log_lo = std::log(x_max);
  const double log_hi = std::log(x_tail_max);
  for (int j = 1; j <= x_tail_count; ++j) grid.push_back(std::exp(log_lo + (log_hi - log_lo) * j / x_tail_count));
  return grid;
}

ScanOutcome scan_g_nonnegative(const ScalarScanConfig& config) {
  const std::vector<double> phis = config.phi_grid();
  auto scan = [&](int n) {
    ScanOutcome out;
    out.extremum = INFINITY;
    const double g1_zero = g_prime_at_zero(n);
    if (n >= 3 && !(g1_zero > 0.0)) out.violations.push_back({n, "g'(0) > 0", 0.0, 0.0, g1_zero});
    for (double phi : phis) {
      const GValues v = g_family(phi, n);
      if (v.g < out.extremum) {
        out.extremum = v.g;
        out.arg_n = n;
        out.arg_a = phi;
      }
      if (v.g < -kIdentitySlack) out.violations.push_back({n, "g >= 0", phi, 0.0, v.g});
      if (n >= 3) {
        if (v.g_second < -kScanSlack) out.violations.push_back({n, "g'' >= 0", phi, 0.0, v.g_second});
        if (v.g_prime < g1_zero - kScanSlack) out.violations.push_back({n, "g' >= g'(0)", phi, 0.0, v.g_prime});
      }
    }
    return out;
  };
  return scan_over_n(config, scan, [](double a, double b) { return a < b; });
}

Ineq22 ineq22_check(double x, int n) {
  require_n(n);
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "x must be finite and >= 0");
  const double lhs = std::sin(2.0 * std::atan(x) / n);
  const double rhs = 0.5 * x * std::pow(4.0 / (1.0 + x * x), 1.0 / n);
  return {lhs, rhs, lhs <= rhs + kIdentitySlack};
}

ScanOutcome scan_ineq22(const ScalarScanConfig& config) {
  const std::vector<double> xs = config.x_grid();
  auto scan = [&](int n) {
    ScanOutcome out;
    out.extremum = INFINITY;
    for (double x : xs) {
      const Ineq22 r = ineq22_check(x, n);
      const double gap = r.rhs - r.lhs;
      if (gap < out.extremum) {
        out.extremum = gap;
        out.arg_n = n;
        out.arg_a = x;
      }
      if (!r.holds) out.violations.push_back({n, "sin(2phi/n) <= rhs", x, 0.0, gap});
    }
    return out;
  };
  return scan_over_n(config, scan, [](double a, double b) { return a < b; });
}

PsiDecomposition psi_decomposition(double x, double y, int n) {
  require_n(n);
  const double nd = n;
  const double phi = std::atan(x);
  const double q = std::pow((1.0 + x * x) / 4.0, 1.0 / nd);
  const double a = q * x * std::sin(2.0 * phi / nd);
  PsiDecomposition d{};
  d.s = 2.0 * nd * q * std::cos(2.0 * phi / nd) * (nd + 2.0 * y + nd * x * x);
  d.t = 4.0 * y * y + 4.0 * nd * (1.0 + a) * y + nd * nd * (1.0 + x * x);
  d.denominator = (nd + 2.0 * y) * (nd + 2.0 * y) + nd * nd * x * x;
  d.y0 = -0.5 * nd * (1.0 + a);
  d.re_psi = (d.s - d.t) / d.denominator;
  return d;
}

ScanOutcome psi_region_check(int n, const ScalarScanConfig& config) {
  require_n(n);
  config.validate();
  const double nd = n;
  std::vector<double> xs = config.x_grid();
  const std::size_t half = xs.size();
  for (std::size_t j = 0; j < half; ++j) {
    if (xs[j] > 0.0) xs.push_back(-xs[j]);
  }

  ScanOutcome out;
  out.extremum = -INFINITY;
  for (double x : xs) {
    const double boundary = -0.5 * nd * (1.0 + x * x);
    for (double dy : config.y_offsets) {
      const double y = boundary + dy;
      const double pole = std::abs(Complex(nd + 2.0 * y, nd * x));
      if (pole < kPoleTube) {
        ++out.excluded;
        continue;
      }
      if (!out.closest_pole || pole < *out.closest_pole) out.closest_pole = pole;

      const double re = mm_psi(Complex(0.0, x), Complex(y, 0.0), n).real();
      if (re > out.extremum) {
        out.extremum = re;
        out.arg_n = n;
        out.arg_a = x;
        out.arg_b = y;
      }
      if (re > kScanSlack) out.violations.push_back({n, "Re psi <= 0", x, y, re});

      const PsiDecomposition d = psi_decomposition(x, y, n);
      const double s_scale = 2.0 * nd * std::pow((1.0 + x * x) / 4.0, 1.0 / nd) *
                             (std::abs(nd + 2.0 * y) + nd * x * x);
      if (d.s > kScanSlack * std::max(1.0, s_scale)) out.violations.push_back({n, "S <= 0", x, y, d.s});
      const double t_scale = 4.0 * y * y + nd * nd * (1.0 + x * x);
      if (d.t < -kScanSlack * std::max(1.0, t_scale)) out.violations.push_back({n, "T >= 0", x, y, d.t});
      if (boundary > d.y0 + kScanSlack * std::max(1.0, std::abs(boundary))) {
        out.violations.push_back({n, "-n(1+x^2)/2 <= y0", x, y, d.y0 - boundary});
      }
      if (std::abs(d.re_psi - re) > kScanSlack * std::max(1.0, std::abs(re))) {
        out.violations.push_back({n, "S/T decomposition", x, y, d.re_psi - re});
      }
    }
  }
  return out;
}

ScanOutcome psi_region_scan(const ScalarScanConfig& config) {
  return scan_over_n(config, [&](int n) { return psi_region_check(n, config); },
                     [](double a, double b) { return a > b; });
}

}  // namespace schlicht
