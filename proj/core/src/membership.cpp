#include "schlicht/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "schlicht/error.hpp"
#include "schlicht/parallel.hpp"

namespace schlicht {

SamplingPlan SamplingPlan::with_outer_radius(double rho_max, int circles) {
  if (!(rho_max > 0.0 && rho_max < 1.0)) throw Error(ErrorCode::InvalidArgument, "rho_max must lie in (0, 1)");
  if (circles < 1) throw Error(ErrorCode::InvalidArgument, "need at least one circle");
  SamplingPlan plan;
  if (circles == 12) {
    std::erase_if(plan.radii, [&](double r) { return r >= rho_max; });
    plan.radii.push_back(rho_max);
  } else {
    plan.radii.clear();
    for (int k = 1; k <= circles; ++k) plan.radii.push_back(rho_max * k / circles);
  }
  return plan;
}

void SamplingPlan::validate() const {
  if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "sampling plan has no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw Error(ErrorCode::InvalidArgument, "radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw Error(ErrorCode::InvalidArgument, "radii must increase");
  }
  if (angular_count < 16) throw Error(ErrorCode::InvalidArgument, "angular_count must be >= 16");
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be non-negative");
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::HoldsNumerically: return "HOLDS_NUMERICALLY";
    case Status::Fails: return "FAILS";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {
constexpr double kTieTolerance = 1e-12;
}  // namespace

Verdict scan_circles(const CircleQuantity& q, const SamplingPlan& plan, std::vector<SampleRecord>* dump) {
  plan.validate();
  const std::size_t n_r = plan.radii.size();
  const auto n_theta = static_cast<std::size_t>(plan.angular_count);
  std::vector<Complex> samples(n_r * n_theta);

  auto angle = [&](std::size_t j) { return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_theta); };
  auto point = [&](std::size_t i, std::size_t j) { return plan.radii[i] * unit(angle(j)); };

  parallel_for(n_r, [&](std::size_t i) {
    for (std::size_t j = 0; j < n_theta; ++j) samples[i * n_theta + j] = q.sample(point(i, j));
  });

  // Orient so that larger score means closer to violation.
  const double sign = q.bound == Bound::Upper ? 1.0 : -1.0;
  auto score = [&](Complex v) { return sign * (q.measure(v) - q.threshold); };

  Verdict verdict;
  verdict.per_radius_extrema.reserve(n_r);
  std::optional<std::size_t> fail_circle;
  std::optional<std::pair<std::size_t, std::size_t>> first_in_band;
  std::pair<std::size_t, std::size_t> global{0, 0};
  double global_score = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> circle_best(n_r, 0);

  for (std::size_t i = 0; i < n_r; ++i) {
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_theta; ++j) {
      const Complex v = samples[i * n_theta + j];
      const double s = score(v);
      if (!std::isfinite(s)) {
        throw Error(ErrorCode::EvaluationFailure,
                    "non-finite sample at rho=" + std::to_string(plan.radii[i]));
      }
      best_score = std::max(best_score, s);
      if (s > -plan.delta && s < plan.delta && i + 1 < n_r && !first_in_band) first_in_band = {{i, j}};
      if (dump) dump->push_back({plan.radii[i], angle(j), v});
    }
    // Scores equal up to rounding count as ties; the smallest angle wins.
    const double tie = kTieTolerance * std::max(1.0, std::abs(best_score));
    while (score(samples[i * n_theta + best]) < best_score - tie) ++best;
    circle_best[i] = best;
    if (best_score >= plan.delta && !fail_circle) fail_circle = i;
    if (best_score > global_score) {
      global_score = best_score;
      global = {i, best};
    }
    verdict.per_radius_extrema.push_back({plan.radii[i], q.measure(samples[i * n_theta + best]), point(i, best)});
  }

  auto set_extremal = [&](std::size_t i, std::size_t j) {
    const Complex v = samples[i * n_theta + j];
    verdict.extremal_point = point(i, j);
    verdict.extremal_sample = v;
    verdict.extremal_value = q.measure(v);
  };

  if (fail_circle) {
    const std::size_t i = *fail_circle;
    verdict.status = Status::Fails;
    set_extremal(i, circle_best[i]);
    verdict.witness = verdict.extremal_point;
  } else if (first_in_band) {
    verdict.status = Status::Inconclusive;
    set_extremal(global.first, global.second);
    verdict.witness = point(first_in_band->first, first_in_band->second);
  } else {
    verdict.status = Status::HoldsNumerically;
    set_extremal(global.first, global.second);
  }
  return verdict;
}

Complex u_functional(const AnalyticFunction& f, Complex z) {
  const Complex q = f.z_over_f(z);
  const Complex t = q * q * f.derivative(z) - 1.0;
  if (!is_finite(t)) throw Error(ErrorCode::EvaluationFailure, "U-functional is not finite");
  return t;
}

Verdict u_membership(const AnalyticFunction& f, const SamplingPlan& plan, std::vector<SampleRecord>* dump) {
  CircleQuantity q{
      [&f](Complex z) { return u_functional(f, z); },
      [](Complex v) { return std::abs(v); },
      Bound::Upper,
      1.0,
  };
  return scan_circles(q, plan, dump);
}

Verdict halfplane_check(const AnalyticFunction& f, int n, const SamplingPlan& plan,
                        std::vector<SampleRecord>* dump) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "half-plane check needs n >= 1");
  const double half_n = 0.5 * n;
  CircleQuantity q{
      [&f, half_n](Complex z) { return std::exp(half_n * f.log_f_over_z(z)); },
      [](Complex v) { return v.real(); },
      Bound::Lower,
      0.5,
  };
  return scan_circles(q, plan, dump);
}

Verdict halfplane_plain_check(const AnalyticFunction& f, double r, const SamplingPlan& plan) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "radius must lie in (0, 1)");
  SamplingPlan restricted = plan;
  std::erase_if(restricted.radii, [r](double rho) { return rho >= r; });
  restricted.radii.push_back(r);
  CircleQuantity q{
      [&f](Complex z) { return 1.0 / f.z_over_f(z); },
      [](Complex v) { return v.real(); },
      Bound::Lower,
      0.5,
  };
  return scan_circles(q, restricted);
}

Complex starlike_functional(const AnalyticFunction& f, Complex z) {
  const Complex v = f.z_over_f(z) * f.derivative(z);
  if (!is_finite(v)) throw Error(ErrorCode::EvaluationFailure, "z f'/f is not finite");
  return v;
}

Verdict starlike_check(const AnalyticFunction& f, const SamplingPlan& plan) {
  CircleQuantity q{
      [&f](Complex z) { return starlike_functional(f, z); },
      [](Complex v) { return v.real(); },
      Bound::Lower,
      0.0,
  };
  return scan_circles(q, plan);
}

Complex mm_psi(Complex r, Complex s, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "psi needs n >= 1");
  const double nd = n;
  const Complex denom = nd * (r + 1.0) + 2.0 * s;
  if (std::abs(denom) < 1e-12) throw Error(ErrorCode::PoleOfPsi, "n(r+1) + 2s vanishes");
  const Complex half = (r + 1.0) / 2.0;
  if (on_branch_cut(half)) throw Error(ErrorCode::BranchCut, "(r+1)/2 on the closed negative axis");
  const Complex power = std::exp((2.0 / nd) * std::log(half));
  return 2.0 * nd * power * (r + 1.0) / denom - 1.0;
}

SubstitutionCheck mm_substitution_check(const AnalyticFunction& f, int n, Complex z, int order) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "substitution check needs n >= 1");
  const double half_n = 0.5 * n;

  const Complex p = 2.0 * std::exp(half_n * f.log_f_over_z(z)) - 1.0;

  const TruncatedSeries f_over_z = series_of(f, order + 1).shifted_down();
  TruncatedSeries p_series = series_pow(f_over_z, half_n) * 2.0;
  p_series.at(0) -= 1.0;
  const Complex dp = series_eval(series_derivative(p_series), z).value;

  const Complex q = f.z_over_f(z);
  const Complex direct = 2.0 / (q * q * f.derivative(z)) - 1.0;
  const Complex via_psi = mm_psi(p, z * dp, n);
  return {via_psi, direct, std::abs(via_psi - direct)};
}

}  // namespace schlicht
