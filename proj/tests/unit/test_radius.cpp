#include <doctest.h>

#include <cmath>

#include "schlicht/catalog.hpp"
#include "schlicht/error.hpp"
#include "schlicht/radius.hpp"

using namespace schlicht;

namespace {

const double kSqrt2m1 = std::sqrt(2.0) - 1.0;

// Brute force: min over a fine circle grid of Re (1 - z)^{-power}, then bisection.
double koebe_power_radius(double power) {
  auto passes = [&](double r) {
    double m = INFINITY;
    for (int j = 0; j < 200000; ++j) {
      const Complex z = r * unit(2.0 * kPi * j / 200000.0);
      m = std::min(m, std::pow(1.0 - z, -power).real());
    }
    return m > 0.5;
  };
  double lo = 0.1, hi = 0.9;
  while (hi - lo > 1e-9) (passes(0.5 * (lo + hi)) ? lo : hi) = 0.5 * (lo + hi);
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("half-plane radius of the Koebe function") {
  const RadiusReport r = radius_bisect({.kind = PredicateKind::HalfplanePlain, .function = parse_function("koebe")});
  CHECK(std::abs(r.r_star - kSqrt2m1) < 1e-6);
  CHECK_FALSE(r.no_crossing);
  REQUIRE(r.failure_witness);
  CHECK_FALSE(r.failure_witness->passes);
  CHECK(r.failure_witness->extremum <= 0.5);
  // Re 1/(1-z)^2 is smallest at z = -r
  CHECK(std::abs(r.failure_witness->at + r.failure_witness->r) < 1e-3);
}

TEST_CASE("power half-plane radius against brute force") {
  for (int n : {1, 3}) {
    const RadiusReport r = radius_bisect(
        {.kind = PredicateKind::HalfplanePower, .function = parse_function("koebe"), .power_n = n});
    CHECK_MESSAGE(std::abs(r.r_star - koebe_power_radius(n)) < 2e-6, n);
  }
  // n = 2 reproduces the plain predicate
  const RadiusReport two = radius_bisect(
      {.kind = PredicateKind::HalfplanePower, .function = parse_function("koebe"), .power_n = 2});
  CHECK(std::abs(two.r_star - kSqrt2m1) < 1e-6);
}

TEST_CASE("two-point radius of the Koebe function") {
  const RadiusReport r = radius_bisect(
      {.kind = PredicateKind::TwoPoint, .function = parse_function("koebe"), .tolerance = 1e-5});
  CHECK(std::abs(r.r_star - kSqrt2m1) < 1e-4);
  REQUIRE(r.failure_witness);
  CHECK(r.failure_witness->extremum >= 1.0);
}

TEST_CASE("no crossing") {
  SUBCASE("predicate holds on the whole bracket") {
    for (const char* id : {"identity", "half_plane:+1"}) {
      const RadiusReport r = radius_bisect({.kind = PredicateKind::HalfplanePlain, .function = parse_function(id)});
      CHECK_MESSAGE(r.no_crossing, id);
      CHECK(r.r_star == 0.9);
      CHECK_FALSE(r.failure_witness);
    }
    const RadiusReport t = radius_bisect({.kind = PredicateKind::TwoPoint, .function = catalog_get("identity"),
                                          .torus_grid = 16});
    CHECK(t.no_crossing);
  }
  SUBCASE("predicate already fails at lo") {
    try {
      radius_bisect({.kind = PredicateKind::HalfplanePlain, .function = parse_function("koebe"),
                     .threshold = 0.99, .lo = 0.5});
      FAIL("expected NoCrossing");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoCrossing);
    }
  }
}

TEST_CASE("bracket history") {
  const RadiusReport r = radius_bisect({.kind = PredicateKind::HalfplanePlain, .function = parse_function("hexagonal:+1"),
                                        .tolerance = 1e-8});
  REQUIRE(r.bracket_history.size() > 2);
  for (std::size_t k = 0; k < r.bracket_history.size(); ++k) {
    const auto [lo, hi] = r.bracket_history[k];
    CHECK(lo < hi);
    if (k > 0) {
      const auto [plo, phi] = r.bracket_history[k - 1];
      CHECK(lo >= plo);
      CHECK(hi <= phi);
      CHECK(std::abs((hi - lo) - 0.5 * (phi - plo)) < 1e-15);
    }
  }
  const auto [lo, hi] = r.bracket_history.back();
  CHECK(hi - lo < 1e-8);
  CHECK(r.r_star > lo);
  CHECK(r.r_star < hi);
  CHECK(probe_radius({.kind = PredicateKind::HalfplanePlain, .function = parse_function("hexagonal:+1")}, lo).passes);
}

TEST_CASE("rotation invariance") {
  for (PredicateKind kind : {PredicateKind::HalfplanePlain, PredicateKind::HalfplanePower}) {
    const double tol = 1e-6;
    const RadiusReport a = radius_bisect({.kind = kind, .function = parse_function("hexagonal:+1"), .power_n = 3});
    const RadiusReport b = radius_bisect({.kind = kind, .function = parse_function("hexagonal:+1@rotate:1"), .power_n = 3});
    CHECK(std::abs(a.r_star - b.r_star) <= 2 * tol);
  }
}

TEST_CASE("probe validation and defaults") {
  const RadiusProblem p{.kind = PredicateKind::TwoPoint, .function = parse_function("koebe")};
  CHECK(p.effective_threshold() == 1.0);
  CHECK(RadiusProblem{.function = parse_function("koebe")}.effective_threshold() == 0.5);
  CHECK_THROWS_AS(probe_radius(p, 1.0), Error);
  CHECK_THROWS_AS(radius_bisect({.function = parse_function("koebe"), .lo = 0.5, .hi = 0.4}), Error);
  CHECK(to_string(PredicateKind::HalfplanePower) == "halfplane-power");
}

TEST_CASE("recorded class constant") {
  const RecordedConstant c = theorem_a_constant();
  CHECK(c.value == 0.835);
  CHECK(c.caveat == "NOT_INDEPENDENTLY_VERIFIED");
}
