#include "schlicht/cli/runbook.hpp"

#include <chrono>
#include <functional>
#include <cmath>
#include <random>

#include "schlicht/catalog.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/inequality_lab.hpp"
#include "schlicht/koebe.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/radius.hpp"

namespace schlicht::cli {

namespace {

using Clock = std::chrono::steady_clock;

const double kSqrt2m1 = std::sqrt(2.0) - 1.0;

// Uniform in the disk |z| < radius.
Complex random_disk_point(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = radius * std::sqrt(u01(rng));
  return r * unit(2.0 * kPi * u01(rng));
}

nlohmann::json point_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

class Check {
 public:
  Check(std::string name, std::string function_id) : start_(Clock::now()) {
    doc_.command = "verify-paper";
    doc_.check = std::move(name);
    doc_.function_id = std::move(function_id);
  }

  ReportDocument& doc() { return doc_; }
  nlohmann::json& params() { return doc_.params; }
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

  ReportDocument finish(bool pass) {
    doc_.elapsed_ms = elapsed_ms();
    doc_.verdict = pass ? "PASS" : "FAIL";
    return std::move(doc_);
  }

 private:
  Clock::time_point start_;
  ReportDocument doc_;
};

ReportDocument u_functional_identities(const RunbookConfig& config) {
  Check check("u-functional-identities", "koebe,f1,u_family");
  std::mt19937_64 rng(config.seed);
  struct Case {
    AnalyticFunction f;
    std::function<Complex(Complex)> expected;
  };
  std::vector<Case> cases{
      {parse_function("koebe"), [](Complex z) { return -z * z; }},
      {parse_function("f1"), [](Complex z) { return -z * z * z; }},
  };
  const std::vector<std::pair<int, double>> families{{2, 1.0}, {3, 0.5}, {3, 1.0}, {4, 1.0 / 3.0}, {5, 0.25}};
  for (auto [n, c] : families) {
    cases.push_back({catalog_get("u_family", std::vector<double>{double(n), c}),
                     [n, c](Complex z) { return (n - 1) * c * ipow(z, n); }});
  }

  constexpr int kPoints = 10000;
  constexpr double kTol = 1e-12;
  std::vector<Complex> points(kPoints);
  for (auto& z : points) z = random_disk_point(rng);

  double worst = 0.0;
  Complex worst_z{}, worst_value{};
  nlohmann::json per_function = nlohmann::json::object();
  for (const auto& c : cases) {
    double max_err = 0.0;
    for (Complex z : points) {
      const Complex t = u_functional(c.f, z);
      const double err = std::abs(t - c.expected(z));
      if (err > max_err) max_err = err;
      if (err > worst) {
        worst = err;
        worst_z = z;
        worst_value = t;
      }
    }
    per_function[c.f.id()] = max_err;
  }
  check.params() = {{"points", kPoints}, {"tolerance", kTol}, {"max_error", per_function}, {"budget_ms", 1000}};
  check.doc().extremal = Extremal::at(worst_z, worst_value);
  check.doc().margin = kTol - worst;
  return check.finish(worst < kTol && check.elapsed_ms() < 1000);
}

ReportDocument membership_table(const RunbookConfig& config) {
  Check check("membership-table", "");
  const SamplingPlan plan = SamplingPlan::with_outer_radius(0.999);
  constexpr double kTol = 1e-3;
  bool pass = true;
  double margin = INFINITY;

  nlohmann::json members = nlohmann::json::object();
  for (const auto& id : config.expected_u_members) {
    const Verdict v = u_membership(parse_function(id), plan);
    const bool ok = v.status == Status::HoldsNumerically;
    pass = pass && ok;
    margin = std::min(margin, 1.0 - v.extremal_value);
    members[id] = {{"status", to_string(v.status)}, {"max_modulus", v.extremal_value}};
  }

  nlohmann::json failures = nlohmann::json::object();
  bool extremal_set = false;
  for (const auto& expected : config.expected_failures) {
    const Verdict v = u_membership(parse_function(expected.function), plan);
    const CircleExtremum* at_rho = nullptr;
    for (const auto& c : v.per_radius_extrema) {
      if (std::abs(c.rho - expected.rho) < 1e-12) at_rho = &c;
    }
    const bool real_axis = at_rho && at_rho->at.real() > 0.0 && std::abs(at_rho->at.imag()) < 1e-12;
    const bool value_ok = at_rho && std::abs(at_rho->extremum - expected.modulus) < kTol;
    const bool witness_real = v.witness && v.witness->real() > 0.0 && std::abs(v.witness->imag()) < 1e-12;
    const bool ok = v.status == Status::Fails && real_axis && value_ok && witness_real;
    pass = pass && ok;
    nlohmann::json entry = {{"status", to_string(v.status)}, {"expected_modulus", expected.modulus}};
    if (at_rho) {
      entry["rho"] = at_rho->rho;
      entry["max_modulus"] = at_rho->extremum;
      entry["at"] = point_json(at_rho->at);
      if (!extremal_set) {
        check.doc().extremal = Extremal::at(at_rho->at, u_functional(parse_function(expected.function), at_rho->at));
        extremal_set = true;
      }
    }
    if (v.witness) entry["witness"] = point_json(*v.witness);
    failures[expected.function] = std::move(entry);
  }
  check.params() = {{"members", members}, {"failures", failures}, {"tolerance", kTol}, {"budget_ms", 10000}};
  check.doc().margin = std::isfinite(margin) ? margin : 0.0;
  return check.finish(pass && check.elapsed_ms() < 10000);
}

ReportDocument radius_check(const std::string& name, PredicateKind kind, double tol) {
  Check check(name, "koebe");
  RadiusProblem problem{.kind = kind, .function = parse_function("koebe")};
  const RadiusReport report = radius_bisect(problem);
  const double err = std::abs(report.r_star - kSqrt2m1);
  check.params() = {{"r_star", report.r_star}, {"expected", kSqrt2m1}, {"tolerance", tol},
                    {"threshold", problem.effective_threshold()}, {"no_crossing", report.no_crossing}};
  if (report.failure_witness) {
    const CircleProbe& w = *report.failure_witness;
    check.doc().extremal = {w.at.real(), w.at.imag(), w.extremum, 0.0, std::abs(w.extremum)};
  }
  check.doc().margin = tol - err;
  return check.finish(!report.no_crossing && err < tol);
}

ReportDocument two_point_sharpness() {
  Check check("two-point-sharpness", "koebe");
  const Complex zeta(0.0, kSqrt2m1), u(0.0, -kSqrt2m1);
  const TwoPointResult r = two_point_functional(parse_function("koebe"), zeta, u);
  constexpr double kTol = 1e-10;
  const double err = std::abs(r.modulus - 1.0);
  check.params() = {{"zeta", point_json(zeta)}, {"u", point_json(u)}, {"modulus", r.modulus}, {"tolerance", kTol}};
  check.doc().extremal = Extremal::at(zeta, r.value);
  check.doc().margin = kTol - err;
  return check.finish(err < kTol);
}

ReportDocument halfplane_power() {
  Check check("halfplane-power", "u_family,catalog");
  constexpr double kTol = 1e-3;
  bool pass = true;
  double margin = INFINITY;

  SamplingPlan outer;
  outer.radii = {0.999};
  nlohmann::json family = nlohmann::json::object();
  for (int n = 2; n <= 6; ++n) {
    const AnalyticFunction f = catalog_get("u_family", std::vector<double>{double(n), 1.0 / (n - 1)});
    const Verdict v = halfplane_check(f, n, outer);
    const double gap = v.extremal_value - (0.5 - kTol);
    pass = pass && gap > 0.0;
    if (gap < margin) {
      margin = gap;
      check.doc().extremal = Extremal::at(v.extremal_point, v.extremal_sample);
    }
    family[f.id()] = {{"n", n}, {"min_re", v.extremal_value}};
  }

  const SamplingPlan plan = SamplingPlan::with_outer_radius(0.999);
  nlohmann::json members = nlohmann::json::object();
  for (const auto& id : catalog_u_member_ids()) {
    const Verdict v = halfplane_check(parse_function(id), 1, plan);
    pass = pass && v.status == Status::HoldsNumerically;
    members[id] = {{"status", to_string(v.status)}, {"min_re", v.extremal_value}};
  }
  check.params() = {{"rho", 0.999}, {"samples", outer.angular_count}, {"tolerance", kTol},
                    {"power_family", family}, {"n1_members", members}};
  check.doc().margin = margin;
  return check.finish(pass);
}

ReportDocument grunsky_closed_forms() {
  Check check("grunsky-closed-forms", "koebe,half_plane:+1");
  constexpr int kOrder = 16;
  constexpr double kTol = 1e-10;
  const GrunskyTable k = grunsky_table(parse_function("koebe"), kOrder);
  const GrunskyTable h = grunsky_table(parse_function("half_plane:+1"), kOrder);

  double err_k = 0.0, err_h = 0.0;
  for (int n = 1; n <= kOrder; ++n) {
    err_k = std::max(err_k, std::abs(k(n, 0) - 2.0 / n));
    err_h = std::max(err_h, std::abs(h(n, 0) - 1.0 / n));
    for (int m = 1; m <= kOrder; ++m) {
      const Complex expected = n == m ? Complex(-1.0 / n) : Complex{};
      err_k = std::max(err_k, std::abs(k(n, m) - expected));
      err_h = std::max(err_h, std::abs(h(n, m)));
    }
  }
  const std::vector<Complex> e1{1.0};
  const BoundCheck eq = grunsky_inequality_check(k, e1);
  const double err_eq = std::max(std::abs(eq.lhs - 1.0), std::abs(eq.rhs - 1.0));

  check.params() = {{"order", kOrder},     {"koebe_max_error", err_k}, {"half_plane_max_error", err_h},
                    {"e1_lhs", eq.lhs},    {"e1_rhs", eq.rhs},         {"tolerance", kTol}};
  const double worst = std::max({err_k, err_h, err_eq});
  check.doc().extremal = Extremal::at(Complex(1.0, 1.0), k(1, 1));
  check.doc().margin = kTol - worst;
  return check.finish(worst < kTol);
}

ReportDocument grunsky_trials(const RunbookConfig& config) {
  Check check("grunsky-trials", "koebe,f1,hexagonal:+1");
  constexpr int kOrder = 16, kTrials = 200, kLength = 8;
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<Complex>> xs(kTrials, std::vector<Complex>(kLength));
  for (auto& x : xs) {
    for (auto& xi : x) xi = Complex(normal(rng), normal(rng));
  }

  int violations = 0;
  double worst_ratio = 0.0;
  nlohmann::json per_function = nlohmann::json::object();
  for (const char* id : {"koebe", "f1", "hexagonal:+1"}) {
    const GrunskyTable table = grunsky_table(parse_function(id), kOrder);
    double ratio = 0.0;
    for (const auto& x : xs) {
      const BoundCheck b = grunsky_inequality_check(table, x);
      if (!b.holds) ++violations;
      ratio = std::max(ratio, b.lhs / b.rhs);
    }
    worst_ratio = std::max(worst_ratio, ratio);
    per_function[id] = {{"max_lhs_over_rhs", ratio}, {"symmetric", table.symmetric}};
  }
  check.params() = {{"order", kOrder}, {"trials", kTrials}, {"vector_length", kLength}, {"seed", config.seed},
                    {"slack", 1e-10},  {"violations", violations}, {"functions", per_function}};
  check.doc().margin = 1.0 - worst_ratio;
  return check.finish(violations == 0);
}

ReportDocument kernel_bound() {
  Check check("kernel-bound", "catalog");
  constexpr int kOrder = 64;
  constexpr double kTol = 1e-6;
  std::vector<Complex> grid;
  for (double rho : {0.2, 0.4, 0.6, 0.8}) {
    for (int k = 0; k < 8; ++k) grid.push_back(rho * unit(2.0 * kPi * k / 8));
  }

  bool pass = true;
  double margin = INFINITY;
  nlohmann::json per_function = nlohmann::json::object();
  for (const auto& id : catalog_s_member_ids()) {
    const GrunskyTable table = grunsky_table(parse_function(id), kOrder);
    double worst = INFINITY;
    int violations = 0;
    for (Complex z : grid) {
      for (Complex u : grid) {
        const BoundCheck b = kernel_bound_check(table, z, u);
        if (!b.holds) ++violations;
        worst = std::min(worst, b.rhs - b.lhs);
      }
    }
    pass = pass && violations == 0;
    margin = std::min(margin, worst);
    per_function[id] = {{"violations", violations}, {"min_rhs_minus_lhs", worst}};
  }

  // Equality for the Koebe function on the real diagonal.
  const GrunskyTable k = grunsky_table(parse_function("koebe"), kOrder);
  double equality_err = 0.0;
  for (Complex z : grid) {
    if (std::abs(z.imag()) > 1e-12) continue;
    const BoundCheck b = kernel_bound_check(k, z, z);
    equality_err = std::max(equality_err, std::abs(b.lhs - b.rhs));
  }
  const BoundCheck half = kernel_bound_check(k, 0.5, 0.5);
  equality_err = std::max({equality_err, std::abs(half.lhs - 16.0 / 9.0), std::abs(half.rhs - 16.0 / 9.0)});
  pass = pass && equality_err < kTol;

  check.params() = {{"order", kOrder},         {"grid_points", grid.size()},  {"functions", per_function},
                    {"koebe_equality_error", equality_err}, {"koebe_half_lhs", half.lhs}, {"tolerance", kTol}};
  check.doc().extremal = {0.5, 0.5, half.lhs, 0.0, half.lhs};
  check.doc().margin = margin;
  return check.finish(pass);
}

ReportDocument koebe_transform_identity(const RunbookConfig& config) {
  Check check("koebe-transform-identity", "koebe,f1");
  constexpr int kPairs = 100;
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(config.seed);
  double worst = 0.0;
  Complex worst_z{}, worst_value{};
  for (const char* id : {"koebe", "f1"}) {
    const AnalyticFunction f = parse_function(id);
    for (int t = 0; t < kPairs; ++t) {
      const Complex zeta = random_disk_point(rng, 0.9);
      const Complex z = random_disk_point(rng, 0.9);
      const MobiusPoint m(zeta);
      const Complex tg = u_functional(koebe_transform(f, m), z);
      const Complex d = two_point_functional(f, zeta, mobius(m, z)).value;
      const double err = std::abs(std::abs(tg) - std::abs(d)) / std::max(1.0, std::abs(d));
      if (err > worst) {
        worst = err;
        worst_z = z;
        worst_value = tg;
      }
    }
  }
  check.params() = {{"pairs_per_function", kPairs}, {"radius", 0.9}, {"max_error", worst}, {"tolerance", kTol}};
  check.doc().extremal = Extremal::at(worst_z, worst_value);
  check.doc().margin = kTol - worst;
  return check.finish(worst < kTol);
}

ReportDocument torus_sup() {
  Check check("torus-sup-koebe", "koebe");
  constexpr double kR = 0.3, kTol = 1e-4;
  const TwoPointSup sup = two_point_sup(parse_function("koebe"), kR, 128, true);
  const double closed = std::pow(2.0 * kR / (1.0 - kR * kR), 2);
  const double err = std::abs(sup.sup - 0.434730);
  check.params() = {{"r", kR},          {"grid", 128},       {"sup", sup.sup},
                    {"expected", 0.434730}, {"closed_form", closed}, {"tolerance", kTol}};
  check.doc().extremal = Extremal::at(sup.argmax_zeta, Complex(sup.sup));
  check.doc().margin = kTol - err;
  return check.finish(err < kTol);
}

ReportDocument starlike_counterexample() {
  Check check("starlike-counterexample", "f1");
  constexpr double kTol = 1e-12;
  const AnalyticFunction f1 = parse_function("f1");
  const Complex z0 = Complex(-1.0, 1.0) / std::sqrt(2.0);
  const double s2 = std::sqrt(2.0);
  const Complex displayed((2.0 - 2.0 * s2) / 3.0, (1.0 - 2.0 * s2) / 3.0);

  const Complex value = starlike_functional(f1, z0);
  const double err = std::abs(value - displayed);
  const Complex inside = starlike_functional(f1, 0.999 * z0);
  const Verdict u = u_membership(f1, SamplingPlan::with_outer_radius(0.999));
  const Verdict star = starlike_check(f1, SamplingPlan::with_outer_radius(0.999));

  const bool value_ok = err < kTol;
  const bool inside_negative = inside.real() < 0.0;
  const bool separation = u.status == Status::HoldsNumerically && star.status == Status::Fails;
  check.params() = {{"z0", point_json(z0)},
                    {"computed", point_json(value)},
                    {"displayed", point_json(displayed)},
                    {"difference", err},
                    {"tolerance", kTol},
                    {"value_matches", value_ok},
                    {"interior_value", point_json(inside)},
                    {"interior_real_negative", inside_negative},
                    {"u_membership", to_string(u.status)},
                    {"starlike", to_string(star.status)}};
  if (star.witness) check.params()["starlike_witness"] = point_json(*star.witness);
  check.doc().extremal = Extremal::at(z0, value);
  check.doc().margin = kTol - err;
  return check.finish(value_ok && inside_negative && separation);
}

ReportDocument scalar_inequalities() {
  Check check("scalar-inequalities", "");
  const ScalarScanConfig config;
  const ScanOutcome g = scan_g_nonnegative(config);
  const ScanOutcome i22 = scan_ineq22(config);
  const ScanOutcome psi = psi_region_scan(config);

  constexpr double kTol = 1e-12;
  double n2_err = 0.0;
  for (double x : config.x_grid()) {
    const Ineq22 r = ineq22_check(x, 2);
    n2_err = std::max(n2_err, std::abs(r.lhs - r.rhs));
  }
  for (double phi : config.phi_grid()) n2_err = std::max(n2_err, std::abs(g_family(phi, 2).g));

  const bool pass = g.clean() && i22.clean() && psi.clean() && n2_err < kTol && check.elapsed_ms() < 20000;
  check.params() = {{"n_min", config.n_min},
                    {"n_max", config.n_max},
                    {"g_min", g.extremum},
                    {"g_violations", g.violations.size()},
                    {"ineq22_min_gap", i22.extremum},
                    {"ineq22_violations", i22.violations.size()},
                    {"psi_max_re", psi.extremum},
                    {"psi_violations", psi.violations.size()},
                    {"psi_closest_pole", psi.closest_pole.value_or(0.0)},
                    {"n2_equality_error", n2_err},
                    {"budget_ms", 20000}};
  check.doc().extremal = {psi.arg_a, psi.arg_b, psi.extremum, 0.0, std::abs(psi.extremum)};
  check.doc().margin = -psi.extremum;
  return check.finish(pass);
}

ReportDocument mobius_properties(const RunbookConfig& config) {
  Check check("mobius-properties", "");
  constexpr int kPairs = 1000;
  constexpr double kTol = 1e-12;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  double inverse_err = 0.0, boundary_err = 0.0;
  bool self_map = true;
  Complex worst_z{};
  for (int t = 0; t < kPairs; ++t) {
    const Complex zeta = random_disk_point(rng, 0.99);
    const Complex z = random_disk_point(rng);
    const MobiusPoint m(zeta), inv(-zeta);
    const Complex w = mobius(m, z);
    self_map = self_map && std::abs(w) < 1.0;
    const double e = std::abs(mobius(inv, w) - z);
    if (e > inverse_err) {
      inverse_err = e;
      worst_z = z;
    }
    boundary_err = std::max(boundary_err, std::abs(std::abs(mobius(m, unit(angle(rng)))) - 1.0));
  }
  check.params() = {{"pairs", kPairs},           {"zeta_radius", 0.99},        {"self_map", self_map},
                    {"inverse_error", inverse_err}, {"boundary_error", boundary_err}, {"tolerance", kTol}};
  check.doc().extremal = Extremal::at(worst_z, Complex(inverse_err));
  check.doc().margin = kTol - std::max(inverse_err, boundary_err);
  return check.finish(self_map && inverse_err < kTol && boundary_err < kTol);
}

}  // namespace

const std::vector<std::string>& runbook_checks() {
  static const std::vector<std::string> kChecks{
      "u-functional-identities", "membership-table",     "radius-halfplane-koebe",   "radius-two-point-koebe",
      "two-point-sharpness",     "halfplane-power",      "grunsky-closed-forms",     "grunsky-trials",
      "kernel-bound",            "koebe-transform-identity", "torus-sup-koebe",      "starlike-counterexample",
      "scalar-inequalities",     "mobius-properties"};
  return kChecks;
}

std::vector<ReportDocument> run_verify_paper(const RunbookConfig& config) {
  std::vector<std::function<ReportDocument()>> steps{
      [&] { return u_functional_identities(config); },
      [&] { return membership_table(config); },
      [] { return radius_check("radius-halfplane-koebe", PredicateKind::HalfplanePlain, 1e-6); },
      [] { return radius_check("radius-two-point-koebe", PredicateKind::TwoPoint, 1e-4); },
      [] { return two_point_sharpness(); },
      [] { return halfplane_power(); },
      [] { return grunsky_closed_forms(); },
      [&] { return grunsky_trials(config); },
      [] { return kernel_bound(); },
      [&] { return koebe_transform_identity(config); },
      [] { return torus_sup(); },
      [] { return starlike_counterexample(); },
      [] { return scalar_inequalities(); },
      [&] { return mobius_properties(config); },
  };

  std::vector<ReportDocument> docs;
  docs.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      docs.push_back(steps[i]());
    } catch (const std::exception& e) {
      // A crashing check still yields its entry.
      ReportDocument doc;
      doc.command = "verify-paper";
      doc.check = runbook_checks()[i];
      doc.verdict = "FAIL";
      doc.params = {{"error", e.what()}};
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

CommandResult run_verify_paper_command(const RunbookConfig& config) {
  CommandResult result;
  result.documents = run_verify_paper(config);
  for (const auto& doc : result.documents) {
    if (doc.verdict != "PASS") result.exit_code = kExitFail;
  }
  return result;
}

}  // namespace schlicht::cli
