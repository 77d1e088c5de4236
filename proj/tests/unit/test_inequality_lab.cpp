#include <doctest.h>

#include <cmath>
#include <random>

#include "schlicht/complex.hpp"
#include "schlicht/error.hpp"
#include "schlicht/inequality_lab.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/parallel.hpp"

using namespace schlicht;

namespace {

ScalarScanConfig small_config() {
  ScalarScanConfig c;
  c.n_max = 8;
  c.phi_count = 2000;
  c.x_count = 400;
  c.x_tail_count = 50;
  return c;
}

double g_direct(double phi, int n) {
  return std::pow(2.0 * std::cos(phi), 2.0 / n - 1.0) * std::sin(phi) - std::sin(2.0 * phi / n);
}

}  // namespace

TEST_CASE("the auxiliary function g") {
  for (int n = 2; n <= 12; ++n) CHECK(g_family(0.0, n).g == 0.0);
  for (double phi : {0.1, 0.7, 1.2, 1.5}) CHECK(std::abs(g_family(phi, 2).g) < 1e-15);
  CHECK(std::abs(g_prime_at_zero(3) - 2.0 * (std::exp2(2.0 / 3.0 - 2.0) - 1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(g_prime_at_zero(3) - 0.127033) < 1e-6);
  CHECK(g_prime_at_zero(3) == doctest::Approx(g_family(0.0, 3).g_prime).epsilon(1e-14));

  const double h = 1e-5;
  for (int n : {3, 4, 7, 15}) {
    for (double phi : {0.05, 0.4, 0.9, 1.3}) {
      const GValues v = g_family(phi, n);
      CHECK(std::abs(v.g - g_direct(phi, n)) < 1e-15);
      CHECK(std::abs(v.g_prime - (g_direct(phi + h, n) - g_direct(phi - h, n)) / (2 * h)) < 1e-8);
      CHECK(std::abs(v.g_second - (g_family(phi + h, n).g_prime - g_family(phi - h, n).g_prime) / (2 * h)) < 1e-7);
    }
  }
  CHECK_THROWS_AS(g_family(kPi / 2, 3), Error);
  CHECK_THROWS_AS(g_family(-0.1, 3), Error);
  CHECK_THROWS_AS(g_family(0.1, 1), Error);
}

TEST_CASE("g scan") {
  const ScanOutcome s = scan_g_nonnegative(small_config());
  CHECK(s.clean());
  CHECK(s.extremum >= -1e-12);

  ScalarScanConfig only3 = small_config();
  only3.n_min = only3.n_max = 3;
  const ScanOutcome t = scan_g_nonnegative(only3);
  CHECK(t.arg_n == 3);
  CHECK(t.arg_a == 0.0);
  CHECK(t.extremum == 0.0);
}

TEST_CASE("sine bound") {
  for (int n = 2; n <= 10; ++n) {
    const Ineq22 z = ineq22_check(0.0, n);
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
    CHECK(z.holds);
  }
  for (double x : {0.3, 1.0, 7.0, 400.0}) {
    // n = 2 is an identity: both sides are x / sqrt(1 + x^2)
    const Ineq22 r = ineq22_check(x, 2);
    CHECK(std::abs(r.lhs - x / std::sqrt(1 + x * x)) < 1e-15);
    CHECK(std::abs(r.rhs - x / std::sqrt(1 + x * x)) < 1e-15);
    CHECK(r.holds);
  }
  const Ineq22 five = ineq22_check(2.0, 5);
  CHECK(std::abs(five.lhs - std::sin(2.0 * std::atan(2.0) / 5.0)) < 1e-15);
  CHECK(std::abs(five.lhs - 0.4285248) < 1e-7);
  CHECK(five.holds);
  CHECK_THROWS_AS(ineq22_check(-1.0, 3), Error);

  const ScanOutcome s = scan_ineq22(small_config());
  CHECK(s.clean());
  CHECK(s.extremum >= -1e-12);
}

TEST_CASE("psi on the imaginary axis") {
  CHECK(std::abs(mm_psi(Complex(0.0, 0.0), Complex(-1.5), 2) - Complex(-3.0)) < 1e-14);
  CHECK(std::abs(mm_psi(Complex(0.0, 1.0), Complex(-2.0), 2) - Complex(0.0, -1.0)) < 1e-14);

  // T vanishes on the parabola when n = 2
  for (double x : {0.0, 0.5, 3.0}) {
    const PsiDecomposition d = psi_decomposition(x, -(1.0 + x * x), 2);
    CHECK(std::abs(d.t) < 1e-12 * (1 + std::pow(1 + x * x, 2)));
  }

  std::mt19937_64 rng(307);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), uy(-50.0, 5.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 9;
    const double x = ux(rng), y = uy(rng);
    const PsiDecomposition d = psi_decomposition(x, y, n);
    const double re = mm_psi(Complex(0.0, x), Complex(y), n).real();
    CHECK(std::abs(d.re_psi - re) < 1e-10 * std::max(1.0, std::abs(re)));
    CHECK(std::abs(d.denominator - std::norm(Complex(n + 2 * y, n * x))) < 1e-9 * d.denominator);
  }
}

TEST_CASE("psi region scan") {
  const ScalarScanConfig c = small_config();
  const ScanOutcome s = psi_region_scan(c);
  CHECK(s.clean());
  CHECK(s.extremum <= 1e-9);
  // x = 0, y = -n/2 is the pole, once per n
  CHECK(s.excluded == static_cast<std::size_t>(c.n_max - c.n_min + 1));
  REQUIRE(s.closest_pole);
  CHECK(*s.closest_pole > 1e-9);
}

TEST_CASE("scan configuration") {
  ScalarScanConfig c;
  c.n_min = 1;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.y_offsets = {0.5};
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.x_tail_max = 10.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = small_config();
  const auto xs = c.x_grid();
  CHECK(xs.front() == 0.0);
  CHECK(std::abs(xs.back() - c.x_tail_max) < 1e-9);
  CHECK(xs.size() == static_cast<std::size_t>(c.x_count + c.x_tail_count));
}

TEST_CASE("scans do not depend on the worker count") {
  const unsigned saved = max_threads();
  set_max_threads(1);
  const ScanOutcome a = psi_region_scan(small_config());
  const ScanOutcome g1 = scan_g_nonnegative(small_config());
  set_max_threads(4);
  const ScanOutcome b = psi_region_scan(small_config());
  const ScanOutcome g4 = scan_g_nonnegative(small_config());
  set_max_threads(saved);
  CHECK(a.extremum == b.extremum);
  CHECK(a.arg_n == b.arg_n);
  CHECK(a.arg_a == b.arg_a);
  CHECK(a.arg_b == b.arg_b);
  CHECK(g1.extremum == g4.extremum);
  CHECK(g1.arg_a == g4.arg_a);
}
