#include "schlicht/radius.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "schlicht/error.hpp"
#include "schlicht/koebe.hpp"
#include "schlicht/parallel.hpp"

namespace schlicht {

std::string_view to_string(PredicateKind kind) noexcept {
  switch (kind) {
    case PredicateKind::HalfplanePlain: return "halfplane-plain";
    case PredicateKind::HalfplanePower: return "halfplane-power";
    case PredicateKind::TwoPoint: return "two-point";
  }
  return "unknown";
}

double RadiusProblem::effective_threshold() const {
  if (threshold) return *threshold;
  return kind == PredicateKind::TwoPoint ? 1.0 : 0.5;
}

namespace {

// Minimum of fn(theta) over a uniform circle grid, then golden-section
// polishing between the neighbours of the grid minimizer.
std::pair<double, double> circle_min(const std::function<double(double)>& fn, int count, bool refine) {
  const auto m = static_cast<std::size_t>(count);
  const double step = 2.0 * kPi / count;
  std::vector<double> values(m);
  parallel_for(m, [&](std::size_t j) { values[j] = fn(step * static_cast<double>(j)); });
  std::size_t best = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (values[j] < values[best]) best = j;
  }
  double theta = step * static_cast<double>(best);
  double value = values[best];
  if (!refine) return {value, theta};

  constexpr double kInvPhi = 0.6180339887498949;
  double a = theta - step, b = theta + step;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > 1e-13) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
    }
  }
  const double t = fc <= fd ? c : d;
  const double v = std::min(fc, fd);
  if (v < value) {
    value = v;
    theta = t;
  }
  return {value, theta};
}

}  // namespace

CircleProbe probe_radius(const RadiusProblem& problem, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "probe radius must lie in (0, 1)");
  const double threshold = problem.effective_threshold();
  const AnalyticFunction& f = problem.function;
  CircleProbe probe;
  probe.r = r;

  switch (problem.kind) {
    case PredicateKind::HalfplanePlain:
    case PredicateKind::HalfplanePower: {
      std::function<double(double)> fn;
      if (problem.kind == PredicateKind::HalfplanePlain) {
        fn = [&](double t) { return (1.0 / f.z_over_f(r * unit(t))).real(); };
      } else {
        if (problem.power_n < 1) throw Error(ErrorCode::InvalidArgument, "power n must be >= 1");
        const double half_n = 0.5 * problem.power_n;
        fn = [&, half_n](double t) { return std::exp(half_n * f.log_f_over_z(r * unit(t))).real(); };
      }
      const auto [value, theta] = circle_min(fn, problem.angular_count, problem.refine);
      probe.extremum = value;
      probe.at = r * unit(theta);
      probe.passes = value > threshold;
      break;
    }
    case PredicateKind::TwoPoint: {
      const TwoPointSup sup = two_point_sup(f, r, problem.torus_grid, problem.refine);
      probe.extremum = sup.sup;
      probe.at = sup.argmax_zeta;
      probe.at_u = sup.argmax_u;
      probe.passes = sup.sup < threshold;
      break;
    }
  }
  return probe;
}

RadiusReport radius_bisect(const RadiusProblem& problem) {
  if (!(problem.lo > 0.0 && problem.lo < problem.hi && problem.hi < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "bracket must satisfy 0 < lo < hi < 1");
  }
  if (!(problem.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  RadiusReport report;
  double lo = problem.lo;
  double hi = problem.hi;
  report.bracket_history.emplace_back(lo, hi);

  if (!probe_radius(problem, lo).passes) {
    throw Error(ErrorCode::NoCrossing, "predicate already fails at the lower bracket end");
  }
  CircleProbe at_hi = probe_radius(problem, hi);
  if (at_hi.passes) {
    report.r_star = hi;
    report.no_crossing = true;
    return report;
  }

  while (hi - lo >= problem.tolerance) {
    const double mid = 0.5 * (lo + hi);
    CircleProbe probe = probe_radius(problem, mid);
    if (probe.passes) {
      lo = mid;
    } else {
      hi = mid;
      at_hi = std::move(probe);
    }
    report.bracket_history.emplace_back(lo, hi);
  }
  report.r_star = 0.5 * (lo + hi);
  report.failure_witness = at_hi;
  return report;
}

RecordedConstant theorem_a_constant() noexcept { return {0.835, "NOT_INDEPENDENTLY_VERIFIED"}; }

}  // namespace schlicht
