#pragma once

// Numerical verdicts for circle-indexed conditions on the open unit disk:
// the U condition |(z/f)^2 f' - 1| < 1, the half-plane conditions on
// (f/z)^{n/2}, and starlikeness.
//
// Sampling cannot decide a strict inequality at the boundary of the disk, so
// verdicts are three-state. With score s = (violation amount) and margin
// band delta:
//   FAILS                if some sample has s >= delta;
//   HOLDS_NUMERICALLY    otherwise, provided every circle except the
//                        outermost keeps s <= -delta (the outermost circle
//                        may approach the threshold, as the Koebe function
//                        does for |T| -> 1);
//   INCONCLUSIVE         otherwise.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "schlicht/catalog.hpp"
#include "schlicht/complex.hpp"

namespace schlicht {

struct SamplingPlan {
  std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999};
  int angular_count = 4096;
  double delta = 1e-3;

  /// Default radii capped by rho_max (which becomes the outermost circle)
  /// when circles == 12; otherwise `circles` equally spaced radii ending at rho_max.
  static SamplingPlan with_outer_radius(double rho_max, int circles = 12);

  /// Throws InvalidArgument unless radii are strictly increasing in (0, 1)
  /// and angular_count >= 16.
  void validate() const;
};

enum class Status { HoldsNumerically, Fails, Inconclusive };

std::string_view to_string(Status status) noexcept;

struct CircleExtremum {
  double rho = 0.0;
  double extremum = 0.0;  // max of the measure (upper-bound checks) or min (lower-bound checks)
  Complex at{};           // argmax / argmin, smallest angular index on ties
};

struct Verdict {
  Status status = Status::Inconclusive;
  /// Present for FAILS (and for INCONCLUSIVE: the first in-band sample).
  std::optional<Complex> witness;
  /// Measure at the witness for FAILS, else the global extremum.
  double extremal_value = 0.0;
  Complex extremal_point{};
  /// Raw complex quantity sampled at extremal_point.
  Complex extremal_sample{};
  std::vector<CircleExtremum> per_radius_extrema;
};

enum class Bound { Upper, Lower };

/// A complex quantity sampled on circles, reduced to a real measure that
/// must stay strictly below (Upper) or above (Lower) a threshold.
struct CircleQuantity {
  std::function<Complex(Complex)> sample;
  std::function<double(Complex)> measure;
  Bound bound = Bound::Upper;
  double threshold = 1.0;
};

struct SampleRecord {
  double rho;
  double theta;
  Complex value;
};

/// Shared scan engine. Samples are evaluated in parallel; the reduction is
/// sequential so results do not depend on the worker count.
Verdict scan_circles(const CircleQuantity& quantity, const SamplingPlan& plan,
                     std::vector<SampleRecord>* dump = nullptr);

/// T_f(z) = (z/f(z))^2 f'(z) - 1, formed from z/f so that T_f(0) = 0 exactly.
Complex u_functional(const AnalyticFunction& f, Complex z);

Verdict u_membership(const AnalyticFunction& f, const SamplingPlan& plan = {},
                     std::vector<SampleRecord>* dump = nullptr);

/// Re (f(z)/z)^{n/2} > 1/2, on the branch equal to 1 at the origin.
Verdict halfplane_check(const AnalyticFunction& f, int n, const SamplingPlan& plan = {},
                        std::vector<SampleRecord>* dump = nullptr);

/// Re f(z)/z > 1/2 on |z| <= r: the plan's radii below r plus r itself.
Verdict halfplane_plain_check(const AnalyticFunction& f, double r, const SamplingPlan& plan = {});

/// z f'(z) / f(z); equals 1 at the origin.
Complex starlike_functional(const AnalyticFunction& f, Complex z);

/// Re z f'/f > 0.
Verdict starlike_check(const AnalyticFunction& f, const SamplingPlan& plan = {});

/// psi(r, s) = 2n ((r+1)/2)^{2/n} (r+1) / (n(r+1) + 2s) - 1 with the
/// principal power. Throws PoleOfPsi when |n(r+1) + 2s| < 1e-12.
Complex mm_psi(Complex r, Complex s, int n);

struct SubstitutionCheck {
  Complex psi_side;     // psi(p(z), z p'(z)), p = 2 (f/z)^{n/2} - 1
  Complex direct_side;  // 2 (f(z)/z)^2 / f'(z) - 1
  double difference;
};

/// Evaluates both sides of the identity psi(p, z p') = 2 (f/z)^2 / f' - 1.
/// p' comes from the order-`order` series of p, so |z| should sit well inside
/// the disk for the truncation to be negligible.
SubstitutionCheck mm_substitution_check(const AnalyticFunction& f, int n, Complex z,
                                        int order = kDefaultOrder);

}  // namespace schlicht
