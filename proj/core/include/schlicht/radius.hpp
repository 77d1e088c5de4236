#pragma once

// Bisection for the critical radius of a predicate evaluated on single
// circles |z| = r. Each predicate is monotone in r: Re f/z and
// Re (f/z)^{n/2} are harmonic, so their minimum over |z| <= r sits on the
// circle; the torus supremum of |D_f| grows with the bidisk.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "schlicht/catalog.hpp"

namespace schlicht {

enum class PredicateKind { HalfplanePlain, HalfplanePower, TwoPoint };

std::string_view to_string(PredicateKind kind) noexcept;

struct RadiusProblem {
  PredicateKind kind = PredicateKind::HalfplanePlain;
  AnalyticFunction function;
  int power_n = 1;                   // HalfplanePower only
  std::optional<double> threshold{}; // default 1/2 (half-plane) or 1 (two-point)
  double tolerance = 1e-6;
  double lo = 0.1;
  double hi = 0.9;
  int angular_count = 4096;          // half-plane circle samples
  int torus_grid = 128;              // two-point lattice per angle
  bool refine = true;                // polish circle/torus extrema locally

  double effective_threshold() const;
};

/// Outcome of the predicate on one circle.
struct CircleProbe {
  double r = 0.0;
  bool passes = false;
  double extremum = 0.0;  // circle min (half-plane) or torus max (two-point)
  Complex at{};           // minimizer, or the zeta of the torus maximizer
  Complex at_u{};         // u of the torus maximizer (two-point only)
};

CircleProbe probe_radius(const RadiusProblem& problem, double r);

struct RadiusReport {
  double r_star = 0.0;
  std::vector<std::pair<double, double>> bracket_history;
  /// Probe at the final upper bracket end, where the predicate fails.
  std::optional<CircleProbe> failure_witness;
  /// Set when the predicate still passes at hi; r_star is then hi.
  bool no_crossing = false;
};

/// Throws NoCrossing if the predicate already fails at lo.
RadiusReport radius_bisect(const RadiusProblem& problem);

struct RecordedConstant {
  double value;
  std::string_view caveat;
};

/// The best radius for Re sqrt(f(z)/z) > 1/2 over the whole class S, known
/// only as 0.835...; recorded, not recomputed.
RecordedConstant theorem_a_constant() noexcept;

}  // namespace schlicht
