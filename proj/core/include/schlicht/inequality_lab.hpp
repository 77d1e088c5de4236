#pragma once

// Grid verification of the scalar inequalities behind the half-plane
// criterion Re (f/z)^{n/2} > 1/2: the auxiliary function
//   g(phi) = (2 cos phi)^{2/n - 1} sin phi - sin(2 phi / n)
// and its derivatives, the bound sin(2 phi/n) <= (x/2)(4/(1+x^2))^{1/n}
// with phi = arctan x, and Re psi(ix, y) <= 0 below the parabola
// y = -n(1+x^2)/2 together with its S/T decomposition.

#include <optional>
#include <string>
#include <vector>

namespace schlicht {

struct GValues {
  double g;
  double g_prime;
  double g_second;
};

/// Requires 0 <= phi < pi/2 and n >= 2.
GValues g_family(double phi, int n);

/// g'(0) = 2 (2^{2/n - 2} - 1/n)
double g_prime_at_zero(int n);

struct ScalarScanConfig {
  int n_min = 2;
  int n_max = 20;
  int phi_count = 10000;             // uniform on [0, pi/2)
  int x_count = 1000;                // uniform on [0, x_max]
  double x_max = 50.0;
  int x_tail_count = 200;            // log-spaced on (x_max, x_tail_max]
  double x_tail_max = 1e4;
  std::vector<double> y_offsets{0.0, -0.1, -1.0, -10.0};  // added to -n(1+x^2)/2

  void validate() const;
  std::vector<double> phi_grid() const;
  std::vector<double> x_grid() const;
};

struct Violation {
  int n;
  std::string check;
  double a;      // phi, or x
  double b;      // y when the check is two-dimensional, else 0
  double value;
};

struct ScanOutcome {
  double extremum = 0.0;         // min (g, rhs - lhs) or max (Re psi)
  int arg_n = 0;
  double arg_a = 0.0;
  double arg_b = 0.0;
  std::vector<Violation> violations;
  std::optional<double> closest_pole;  // psi scans: min |n(1+ix) + 2y| kept
  std::size_t excluded = 0;            // psi scans: points dropped near the pole

  bool clean() const { return violations.empty(); }
};

/// Min of g over the grid (slack 1e-12); for n >= 3 also g'' >= 0 and
/// g'(phi) >= g'(0) > 0 (slack 1e-9).
ScanOutcome scan_g_nonnegative(const ScalarScanConfig& config = {});

struct Ineq22 {
  double lhs;
  double rhs;
  bool holds;
};

/// sin(2 arctan(x) / n) against (x/2) (4/(1+x^2))^{1/n}, slack 1e-12.
Ineq22 ineq22_check(double x, int n);

/// ineq22_check over the x grid; extremum is min(rhs - lhs).
ScanOutcome scan_ineq22(const ScalarScanConfig& config = {});

struct PsiDecomposition {
  double s;
  double t;
  double denominator;  // (n + 2y)^2 + n^2 x^2
  double y0;           // stationary point of T
  double re_psi;       // (S - T) / denominator
};

PsiDecomposition psi_decomposition(double x, double y, int n);

/// Re psi(ix, y) <= 1e-9 via mm_psi for y on and below the parabola,
/// S <= 0, T >= 0 (relative slack), -n(1+x^2)/2 <= y0, and agreement of
/// the decomposition with mm_psi. Points with |n(1+ix) + 2y| < 1e-9 are
/// skipped. x runs over the grid and its mirror image.
ScanOutcome psi_region_check(int n, const ScalarScanConfig& config = {});

/// psi_region_check over config.n_min..n_max, merged.
ScanOutcome psi_region_scan(const ScalarScanConfig& config = {});

}  // namespace schlicht
