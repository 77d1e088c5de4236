#include <doctest.h>

#include <cmath>
#include <random>

#include "schlicht/catalog.hpp"
#include "schlicht/error.hpp"
#include "schlicht/koebe.hpp"
#include "schlicht/parallel.hpp"

using namespace schlicht;

namespace {

Complex disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return radius * std::sqrt(u(rng)) * unit(2.0 * kPi * u(rng));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// f(z) = z^2: not univalent, f(1/2) = f(-1/2) exactly.
class SquareModel final : public FunctionModel {
 public:
  Complex value(Complex z) const override { return z * z; }
  Complex derivative(Complex z) const override { return 2.0 * z; }
  Complex z_over_f(Complex z) const override { return 1.0 / z; }
};

}  // namespace

TEST_CASE("disk automorphisms") {
  const MobiusPoint zero(0.0);
  CHECK(mobius(zero, Complex(0.3, -0.2)) == Complex(0.3, -0.2));
  const MobiusPoint p(Complex(0.4, 0.1));
  CHECK(std::abs(mobius(p, 0.0) - Complex(0.4, 0.1)) < 1e-16);

  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int t = 0; t < 1000; ++t) {
    const Complex zeta = disk_point(rng, 0.99);
    const Complex z = disk_point(rng, 1.0);
    const MobiusPoint m(zeta), inv(-zeta);
    const Complex w = mobius(m, z);
    CHECK(std::abs(w) < 1.0);
    CHECK(std::abs(mobius(inv, w) - z) < 1e-12);
    CHECK(std::abs(std::abs(mobius(m, unit(angle(rng)))) - 1.0) < 1e-12);
  }

  CHECK(code_of([] { MobiusPoint bad(1.0); }) == ErrorCode::OutsideDisk);
  CHECK(code_of([] { MobiusPoint bad(Complex(0.8, 0.7)); }) == ErrorCode::OutsideDisk);
  CHECK(code_of([&] { mobius(p, 1.5); }) == ErrorCode::OutsideDisk);
}

TEST_CASE("Koebe transform") {
  std::mt19937_64 rng(103);
  SUBCASE("zeta = 0 leaves f unchanged") {
    const AnalyticFunction f1 = parse_function("f1");
    const AnalyticFunction g = koebe_transform(f1, MobiusPoint(0.0));
    for (int t = 0; t < 50; ++t) {
      const Complex z = disk_point(rng, 0.95);
      CHECK(std::abs(g(z) - f1(z)) < 1e-14);
    }
  }
  SUBCASE("of the identity is z / (1 + conj(zeta) z)") {
    const Complex zeta(-0.3, 0.5);
    const AnalyticFunction g = koebe_transform(catalog_get("identity"), MobiusPoint(zeta));
    for (int t = 0; t < 50; ++t) {
      const Complex z = disk_point(rng, 0.95);
      const Complex d = 1.0 + std::conj(zeta) * z;
      CHECK(std::abs(g(z) - z / d) < 1e-14);
      CHECK(std::abs(g.derivative(z) - 1.0 / (d * d)) < 1e-13);
      CHECK(std::abs(g.second_derivative(z) + 2.0 * std::conj(zeta) / (d * d * d)) < 1e-12);
    }
  }
  SUBCASE("outputs are normalized") {
    for (const char* id : {"koebe", "f1", "hexagonal:+1", "f0"}) {
      for (Complex zeta : {Complex(0.3, 0.0), Complex(-0.2, 0.6), Complex(0.0, -0.7)}) {
        const AnalyticFunction g = koebe_transform(parse_function(id), MobiusPoint(zeta));
        CHECK_MESSAGE(std::abs(g(0.0)) < 1e-15, id);
        const TruncatedSeries s = series_of(g, 16);
        CHECK_MESSAGE(std::abs(s[0]) < 1e-12, id);
        CHECK_MESSAGE(std::abs(s[1] - 1.0) < 1e-10, id);
        CHECK_MESSAGE(std::abs(g.derivative(0.0) - 1.0) < 1e-12, id);
      }
    }
  }
  SUBCASE("derivatives against finite differences") {
    const AnalyticFunction g = koebe_transform(parse_function("f1"), MobiusPoint(Complex(0.2, -0.4)));
    const double h = 1e-5;
    for (int t = 0; t < 20; ++t) {
      const Complex z = disk_point(rng, 0.8);
      CHECK(std::abs(g.derivative(z) - (g(z + h) - g(z - h)) / (2.0 * h)) < 1e-7);
      CHECK(std::abs(g.second_derivative(z) - (g.derivative(z + h) - g.derivative(z - h)) / (2.0 * h)) < 1e-6);
      CHECK(std::abs(g.z_over_f(z) * g(z) - z) < 1e-13);
    }
  }
  SUBCASE("vanishing derivative at zeta") {
    // z / (1 - 2 z^2) has f'(i / sqrt 2) = 0
    const AnalyticFunction f = parse_function("u_family:2:2");
    CHECK(code_of([&] { koebe_transform(f, MobiusPoint(Complex(0.0, 1.0 / std::sqrt(2.0)))); }) ==
          ErrorCode::DegenerateDerivative);
  }
}

TEST_CASE("two-point functional") {
  const AnalyticFunction k = parse_function("koebe");
  SUBCASE("diagonal") {
    const TwoPointResult r = two_point_functional(k, Complex(0.3, 0.1), Complex(0.3, 0.1));
    CHECK(r.value == Complex{});
    CHECK(r.diagonal_flag);
  }
  SUBCASE("near the diagonal the guarded quotient is continuous") {
    const Complex zeta(0.2, -0.5);
    const TwoPointResult near = two_point_functional(k, zeta, zeta + Complex(3e-7, 2e-7));
    CHECK(near.diagonal_flag);
    CHECK(near.modulus < 1e-10);
    const TwoPointResult off = two_point_functional(k, zeta, zeta + Complex(3e-5, 2e-5));
    CHECK_FALSE(off.diagonal_flag);
    CHECK(off.modulus < 1e-6);
  }
  SUBCASE("sharpness witness of the Koebe function") {
    const double a = std::sqrt(2.0) - 1.0;
    CHECK(std::abs(two_point_functional(k, Complex(0.0, a), Complex(0.0, -a)).modulus - 1.0) < 1e-10);
  }
  SUBCASE("identity has D = 0") {
    CHECK(two_point_functional(catalog_get("identity"), 0.3, -0.6).modulus == 0.0);
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { two_point_functional(k, 1.0, 0.0); }) == ErrorCode::OutsideDisk);
    const AnalyticFunction square("square", std::make_shared<SquareModel>());
    CHECK(code_of([&] { two_point_functional(square, 0.5, -0.5); }) == ErrorCode::CoincidentImages);
  }
}

TEST_CASE("torus supremum") {
  const AnalyticFunction k = parse_function("koebe");
  auto closed = [](double r) { return std::pow(2.0 * r / (1.0 - r * r), 2); };
  SUBCASE("koebe at r = 0.3") {
    const TwoPointSup s = two_point_sup(k, 0.3, 128, true);
    CHECK(std::abs(s.sup - closed(0.3)) < 1e-4);
    CHECK(std::abs(s.sup - 0.434730) < 1e-4);
    // attained with zeta and u on the imaginary axis, opposite each other
    CHECK(std::abs(s.argmax_zeta.real()) < 1e-3);
    CHECK(std::abs(s.argmax_zeta + s.argmax_u) < 1e-3);
    CHECK(std::abs(std::abs(s.argmax_zeta.imag()) - 0.3) < 1e-6);
  }
  SUBCASE("koebe at the critical radius") {
    CHECK(std::abs(two_point_sup(k, std::sqrt(2.0) - 1.0, 128, true).sup - 1.0) < 1e-4);
  }
  SUBCASE("identity") { CHECK(two_point_sup(catalog_get("identity"), 0.7, 32).sup < 1e-14); }
  SUBCASE("nondecreasing in r") {
    for (const char* id : {"koebe", "f1", "hexagonal:-1"}) {
      const AnalyticFunction f = parse_function(id);
      double prev = 0.0;
      for (double r : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        const double s = two_point_sup(f, r, 64, true).sup;
        CHECK_MESSAGE(s >= prev - 1e-9, id);
        prev = s;
      }
    }
  }
  SUBCASE("independent of the worker count") {
    const AnalyticFunction f1 = parse_function("f1");
    const unsigned saved = max_threads();
    set_max_threads(1);
    const TwoPointSup a = two_point_sup(f1, 0.37, 64, true);
    set_max_threads(4);
    const TwoPointSup b = two_point_sup(f1, 0.37, 64, true);
    set_max_threads(saved);
    CHECK(a.sup == b.sup);
    CHECK(a.argmax_zeta == b.argmax_zeta);
    CHECK(a.argmax_u == b.argmax_u);
  }
  SUBCASE("bad arguments") {
    CHECK(code_of([&] { two_point_sup(k, 1.0, 16); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { two_point_sup(k, 0.5, 2); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("U-functional of a Koebe transform equals the two-point functional") {
  std::mt19937_64 rng(107);
  for (const auto& id : catalog_u_member_ids()) {
    const AnalyticFunction f = parse_function(id);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Complex zeta = disk_point(rng, 0.9);
      const Complex z = disk_point(rng, 0.9);
      const MobiusPoint m(zeta);
      const Complex tg = u_functional(koebe_transform(f, m), z);
      const Complex d = two_point_functional(f, zeta, mobius(m, z)).value;
      worst = std::max(worst, std::abs(std::abs(tg) - std::abs(d)) / std::max(1.0, std::abs(d)));
    }
    CHECK_MESSAGE(worst < 1e-9, id);
  }
}

TEST_CASE("transform and two-point verdicts agree") {
  const AnalyticFunction k = parse_function("koebe");
  const SamplingPlan plan = SamplingPlan::with_outer_radius(0.999);
  // Koebe transforms of the Koebe function along the real axis stay in U;
  // off the axis |D_k| can exceed 1, and both sides must fail together.
  for (Complex zeta : {Complex(0.0), Complex(0.3), Complex(0.0, 0.5)}) {
    const Theorem2Report r = theorem2_consistency(k, MobiusPoint(zeta), plan);
    CHECK(r.agree);
    CHECK(r.transform_verdict.status == r.two_point_verdict.status);
    if (zeta.imag() == 0.0) CHECK(r.transform_verdict.status == Status::HoldsNumerically);
    CHECK(std::abs(r.transform_verdict.extremal_value - r.two_point_verdict.extremal_value) < 1e-3);
  }
  const Theorem2Report f0 = theorem2_consistency(parse_function("f0"), MobiusPoint(Complex(0.2)), plan);
  CHECK(f0.agree);
  CHECK(f0.transform_verdict.status == Status::Fails);
}
